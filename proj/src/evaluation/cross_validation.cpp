#include "simpqe/evaluation/cross_validation.hpp"

#include <algorithm>
#include <unordered_map>

#include "simpqe/util/error.hpp"
#include "simpqe/util/parallel.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

template <class T>
std::vector<T> gather(std::span<const T> all, std::span<const std::size_t> idx) {
    std::vector<T> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(all[i]);
    return out;
}

struct FoldOutcome {
    // Per tau, per held-out pair.
    std::vector<std::vector<AspectLabel>> labels;
    std::vector<Probabilities> proba;
};

}  // namespace

std::string run_name(Aspect aspect, double tau) {
    const std::string suffix = aspect == Aspect::Overall ? "-rules-" : "-RF-";
    return std::string(display_name(aspect)) + suffix + format_exact(tau);
}

std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold, Aspect aspect) {
    return splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(fold) << 8) | index_of(aspect)));
}

std::vector<AspectLabel> gold_labels(const Dataset& ds, Aspect aspect) {
    std::vector<AspectLabel> out;
    out.reserve(ds.pairs.size());
    for (const auto& p : ds.pairs) {
        const auto& l = p.label(aspect);
        if (!l) {
            throw Error("pair '" + p.id + "' has no " + std::string(to_string(aspect)) + " label");
        }
        out.push_back(*l);
    }
    return out;
}

FeatureMatrix feature_matrix(std::span<const PairFeatures> features, Aspect aspect) {
    FeatureMatrix m;
    for (auto name : feature_names(aspect)) m.names.emplace_back(name);
    m.rows.reserve(features.size());
    for (const auto& f : features) {
        m.rows.push_back(f.for_aspect(aspect).values);
    }
    return m;
}

CvResult cross_validate(const Dataset& ds, Aspect aspect, const FoldFeatureSource& features, const CvConfig& config) {
    if (config.taus.empty()) {
        throw Error("cross-validation needs at least one tau");
    }
    std::vector<ThresholdPolicy> policies;
    for (double t : config.taus) policies.emplace_back(t);

    const std::vector<AspectLabel> gold = gold_labels(ds, aspect);
    const std::vector<Aspect> models = aspect == Aspect::Overall ? std::vector<Aspect>{Aspect::Simplicity, Aspect::Meaning}
                                                                 : std::vector<Aspect>{aspect};
    std::vector<std::vector<AspectLabel>> model_gold;
    for (Aspect a : models) model_gold.push_back(gold_labels(ds, a));

    CvResult result;
    result.aspect = aspect;
    result.folds = stratified_kfold(ds, aspect, config.k, config.seed);

    std::unordered_map<std::string, std::size_t> index_of_id;
    for (std::size_t i = 0; i < ds.pairs.size(); ++i) index_of_id.emplace(ds.pairs[i].id, i);

    std::vector<std::vector<std::size_t>> test_idx(config.k);
    std::vector<std::size_t> fold_of(ds.pairs.size());
    for (std::size_t f = 0; f < config.k; ++f) {
        for (const auto& id : result.folds[f]) {
            test_idx[f].push_back(index_of_id.at(id));
            fold_of[index_of_id.at(id)] = f;
        }
    }

    std::vector<FoldOutcome> outcomes(config.k);
    parallel_for(config.k, config.jobs, [&](std::size_t f) {
        std::vector<std::size_t> train;
        for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
            if (fold_of[i] != f) train.push_back(i);
        }
        // per model: proba of each held-out pair
        std::vector<std::vector<Probabilities>> model_proba;
        for (std::size_t m = 0; m < models.size(); ++m) {
            const FeatureMatrix matrix = features(models[m], f, train);
            if (matrix.rows.size() != ds.pairs.size()) {
                throw Error("feature source returned " + std::to_string(matrix.rows.size()) + " rows for " +
                            std::to_string(ds.pairs.size()) + " pairs");
            }
            const auto X = gather<std::vector<double>>(matrix.rows, train);
            const auto y = gather<AspectLabel>(model_gold[m], train);
            const auto forest =
                train_forest(X, y, models[m], matrix.names, config.forest, fold_seed(config.seed, f, models[m]));
            std::vector<Probabilities> proba;
            proba.reserve(test_idx[f].size());
            for (std::size_t i : test_idx[f]) proba.push_back(forest.predict_proba(matrix.rows[i]));
            model_proba.push_back(std::move(proba));
        }

        auto& out = outcomes[f];
        out.labels.resize(policies.size());
        for (std::size_t t = 0; t < policies.size(); ++t) {
            for (std::size_t j = 0; j < test_idx[f].size(); ++j) {
                if (aspect == Aspect::Overall) {
                    const auto simplicity = predict_label(model_proba[0][j], policies[t]);
                    const auto meaning = predict_label(model_proba[1][j], policies[t]);
                    out.labels[t].push_back(predict_overall(simplicity, meaning));
                } else {
                    out.labels[t].push_back(predict_label(model_proba[0][j], policies[t]));
                }
            }
        }
        if (aspect != Aspect::Overall) out.proba = std::move(model_proba[0]);
    });

    for (std::size_t t = 0; t < policies.size(); ++t) {
        CvRun run;
        run.tau = policies[t].tau;
        const std::string name = run_name(aspect, run.tau);
        std::vector<AspectLabel> pooled_pred(ds.pairs.size());
        std::vector<std::optional<Probabilities>> pooled_proba(ds.pairs.size());
        for (std::size_t f = 0; f < config.k; ++f) {
            const auto fold_gold = gather<AspectLabel>(gold, test_idx[f]);
            run.per_fold.push_back(evaluate(aspect, name + "-fold" + std::to_string(f + 1), fold_gold, outcomes[f].labels[t]));
            for (std::size_t j = 0; j < test_idx[f].size(); ++j) {
                pooled_pred[test_idx[f][j]] = outcomes[f].labels[t][j];
                if (!outcomes[f].proba.empty()) pooled_proba[test_idx[f][j]] = outcomes[f].proba[j];
            }
        }
        run.pooled = evaluate(aspect, name, gold, pooled_pred);
        for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
            run.predictions.push_back(PredictionRow{ds.pairs[i].id, aspect, gold[i], pooled_pred[i], pooled_proba[i]});
        }
        result.runs.push_back(std::move(run));
    }
    return result;
}

CvResult cross_validate(const Dataset& ds, Aspect aspect, const ResourceBundle& resources, const Preprocessor& pre,
                        const CvConfig& config, CvObserver* observer) {
    const auto analyzed = analyze(ds.pairs, pre, config.jobs);
    // Everything except tfidf_cosine is independent of the training folds; that slot is
    // overwritten per fold below.
    const IdfTable placeholder_idf;
    const auto base = extract_features(analyzed, resources, placeholder_idf, config.jobs);

    auto source = [&](Aspect a, std::size_t fold, std::span<const std::size_t> train) {
        FeatureMatrix m = feature_matrix(base, a);
        if (a != Aspect::Simplicity) {
            return m;
        }
        const auto documents = gather<AnalyzedPair>(analyzed, train);
        if (observer != nullptr) {
            std::vector<std::string> held_out;
            std::vector<bool> in_train(analyzed.size(), false);
            for (std::size_t i : train) in_train[i] = true;
            for (std::size_t i = 0; i < analyzed.size(); ++i) {
                if (!in_train[i]) held_out.push_back(analyzed[i].id);
            }
            observer->on_idf_build(fold, documents, held_out);
        }
        const IdfTable idf = build_idf(documents);
        for (std::size_t i = 0; i < analyzed.size(); ++i) {
            m.rows[i][0] = feat_tfidf_cosine(analyzed[i], idf);
        }
        return m;
    };
    // The observer is not required to be thread-safe.
    CvConfig cfg = config;
    if (observer != nullptr) cfg.jobs = 1;
    return cross_validate(ds, aspect, FoldFeatureSource(source), cfg);
}

}  // namespace simpqe
