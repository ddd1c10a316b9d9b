#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config_file.hpp"
#include "simpqe/corpus/dataset.hpp"
#include "simpqe/evaluation/cross_validation.hpp"
#include "simpqe/evaluation/metrics.hpp"
#include "simpqe/evaluation/report.hpp"
#include "simpqe/features/features.hpp"
#include "simpqe/features/idf.hpp"
#include "simpqe/model/forest.hpp"
#include "simpqe/textproc/tokenize.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace fs = std::filesystem;
using namespace simpqe;

namespace {

// ---- paths -----------------------------------------------------------------

/// Input paths are taken as given when they exist; a relative path that does not exist is
/// retried under $SIMPQE_DATA_DIR.
fs::path resolve_input(const std::string& flag, const std::string& value) {
    fs::path p(value);
    if (fs::exists(p)) {
        return p;
    }
    if (p.is_relative()) {
        if (const char* root = std::getenv("SIMPQE_DATA_DIR"); root != nullptr && *root != '\0') {
            fs::path alt = fs::path(root) / p;
            if (fs::exists(alt)) {
                return alt;
            }
        }
    }
    throw Error(flag + ": file not found: " + value);
}

std::optional<fs::path> resolve_optional(const std::string& flag, const std::string& value) {
    if (value.empty()) {
        return std::nullopt;
    }
    return resolve_input(flag, value);
}

fs::path output_path(const std::string& out_dir, const std::string& value) {
    fs::path p(value);
    if (!out_dir.empty() && p.is_relative()) {
        p = fs::path(out_dir) / p;
    }
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    return p;
}

std::string require(const std::string& flag, const std::string& value) {
    if (value.empty()) {
        throw Error(flag + " is required");
    }
    return value;
}

/// Writes to `path`, or to standard output when it is empty.
template <typename Fn>
void write_output(const std::string& out_dir, const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    const fs::path p = output_path(out_dir, path);
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw Error("cannot open for writing: " + p.string());
    }
    fn(out);
    if (!out) {
        throw Error("write failed: " + p.string());
    }
}

// ---- option groups ---------------------------------------------------------

struct CommonOptions {
    std::string config;
    std::string out_dir;
    std::uint64_t seed = 42;
    std::size_t jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool randomized) {
    cmd->add_option("--config", o.config, "INI file with [common] and [" + cmd->get_name() + "] sections");
    cmd->add_option("--out-dir", o.out_dir, "Directory for relative output paths");
    cmd->add_option("--jobs", o.jobs, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
    if (randomized) {
        cmd->add_option("--seed", o.seed, "Master random seed");
    }
}

struct TextOptions {
    std::string stopwords;
    std::string closed_class;
    std::string tags;
};

void add_text(CLI::App* cmd, TextOptions& o) {
    cmd->add_option("--stopwords", o.stopwords, "Stopword list (default: shipped list)");
    cmd->add_option("--closed-class", o.closed_class, "Closed-class word list for the heuristic tagger");
    cmd->add_option("--tags", o.tags, "Pre-tagged sentences (token<TAB>TAG) replacing the heuristic tagger");
}

/// Owns the tagger and stopword list the Preprocessor points at.
class TextSetup {
public:
    explicit TextSetup(const TextOptions& o)
        : stop_path_(resolve_optional("--stopwords", o.stopwords)),
          closed_path_(resolve_optional("--closed-class", o.closed_class)),
          tags_path_(resolve_optional("--tags", o.tags)) {}
    TextSetup(const TextSetup&) = delete;
    TextSetup& operator=(const TextSetup&) = delete;

    const Preprocessor& preprocessor() {
        if (!pre_) {
            stopwords_ = stop_path_ ? WordList::load(*stop_path_) : WordList::default_stopwords();
            if (tags_path_) {
                tagger_ = std::make_unique<PretaggedTagger>(load_pretagged(*tags_path_));
            } else if (closed_path_) {
                tagger_ = std::make_unique<HeuristicTagger>(WordList::load(*closed_path_));
            } else {
                tagger_ = std::make_unique<HeuristicTagger>();
            }
            pre_.emplace(*tagger_, stopwords_);
        }
        return *pre_;
    }

private:
    std::optional<fs::path> stop_path_, closed_path_, tags_path_;
    WordList stopwords_;
    std::unique_ptr<Tagger> tagger_;
    std::optional<Preprocessor> pre_;
};

struct ResourceOptions {
    std::string lm;
    std::string lm_corpus;
    std::size_t lm_order = 3;
    std::string embeddings;
    std::string synonyms;
    std::string regular_freq;
    std::string regular_corpus;
    std::string simple_freq;
    std::string simple_corpus;
    std::string cues;
};

void add_resources(CLI::App* cmd, ResourceOptions& o) {
    cmd->add_option("--lm", o.lm, "N-gram model file (from build-lm)");
    cmd->add_option("--lm-corpus", o.lm_corpus, "Sentence-per-line corpus to train the LM from instead of --lm");
    cmd->add_option("--lm-order", o.lm_order, "Order of the LM trained from --lm-corpus")->check(CLI::PositiveNumber);
    cmd->add_option("--embeddings", o.embeddings, "Word vectors, text format with a `<count> <dim>` header");
    cmd->add_option("--synonyms", o.synonyms, "Synonym lexicon");
    cmd->add_option("--regular-freq", o.regular_freq, "Regular-corpus frequency table (from build-freq)");
    cmd->add_option("--regular-corpus", o.regular_corpus, "Regular corpus to count instead of --regular-freq");
    cmd->add_option("--simple-freq", o.simple_freq, "Simple-corpus frequency table (from build-freq)");
    cmd->add_option("--simple-corpus", o.simple_corpus, "Simple corpus to count instead of --simple-freq");
    cmd->add_option("--cues", o.cues, "Cue-phrase list (default: shipped list)");
}

struct ResolvedResources {
    fs::path lm;
    bool lm_is_corpus = false;
    fs::path embeddings;
    fs::path synonyms;
    fs::path regular;
    bool regular_is_corpus = false;
    fs::path simple;
    bool simple_is_corpus = false;
    std::optional<fs::path> cues;
};

fs::path one_of(const std::string& flag_a, const std::string& a, const std::string& flag_b, const std::string& b,
                bool& is_b) {
    if (!a.empty() && !b.empty()) {
        throw Error(flag_a + " and " + flag_b + " are mutually exclusive");
    }
    if (a.empty() && b.empty()) {
        throw Error(flag_a + " or " + flag_b + " is required");
    }
    is_b = a.empty();
    return is_b ? resolve_input(flag_b, b) : resolve_input(flag_a, a);
}

ResolvedResources resolve_resources(const ResourceOptions& o) {
    ResolvedResources r;
    r.lm = one_of("--lm", o.lm, "--lm-corpus", o.lm_corpus, r.lm_is_corpus);
    r.embeddings = resolve_input("--embeddings", require("--embeddings", o.embeddings));
    r.synonyms = resolve_input("--synonyms", require("--synonyms", o.synonyms));
    r.regular = one_of("--regular-freq", o.regular_freq, "--regular-corpus", o.regular_corpus, r.regular_is_corpus);
    r.simple = one_of("--simple-freq", o.simple_freq, "--simple-corpus", o.simple_corpus, r.simple_is_corpus);
    r.cues = resolve_optional("--cues", o.cues);
    return r;
}

std::vector<std::string> lm_tokens(std::string_view line) {
    std::vector<std::string> toks = tokenize(line);
    for (auto& t : toks) {
        t = to_lower_ascii(t);
    }
    return toks;
}

NGramModel build_lm_from(const fs::path& corpus, std::size_t order, double alpha) {
    std::ifstream in(corpus, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + corpus.string());
    }
    NGramCounter counter(order, alpha);
    for_each_line(in, [&](std::size_t, std::string_view line) { counter.add_sentence(lm_tokens(line)); });
    return std::move(counter).finish();
}

FrequencyTable freq_from(const fs::path& path, bool is_corpus, const std::string& name, const Preprocessor& pre) {
    if (!is_corpus) {
        return FrequencyTable::load(path);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    return build_frequency_table(in, name, pre);
}

ResourceBundle load_resources(const ResolvedResources& r, std::size_t lm_order, const Preprocessor& pre) {
    return ResourceBundle{
        r.lm_is_corpus ? build_lm_from(r.lm, lm_order, NGramModel::kDefaultAlpha) : NGramModel::load(r.lm),
        load_embeddings(r.embeddings),
        load_synonyms(r.synonyms),
        freq_from(r.regular, r.regular_is_corpus, "regular", pre),
        freq_from(r.simple, r.simple_is_corpus, "simple", pre),
        r.cues ? CuePhraseList::load(*r.cues) : CuePhraseList::shipped(),
    };
}

struct ForestOptions {
    std::size_t trees = 100;
    std::size_t max_depth = 0;
    std::size_t min_samples_split = 2;
    std::size_t features_per_split = 0;

    ForestParams params() const {
        ForestParams p;
        p.n_trees = trees;
        p.tree.max_depth = max_depth;
        p.tree.min_samples_split = min_samples_split;
        p.tree.features_per_split = features_per_split;
        return p;
    }
};

void add_forest(CLI::App* cmd, ForestOptions& o) {
    cmd->add_option("--trees", o.trees, "Trees per forest")->check(CLI::PositiveNumber);
    cmd->add_option("--max-depth", o.max_depth, "Maximum tree depth (0 = unbounded)");
    cmd->add_option("--min-samples-split", o.min_samples_split, "Smallest node that may be split")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    cmd->add_option("--features-per-split", o.features_per_split, "Features drawn per split (0 = ceil(sqrt(m)))");
}

Aspect aspect_from(const std::string& s) {
    return parse_aspect(require("--aspect", s));
}

void check_trainable(Aspect aspect) {
    if (aspect == Aspect::Overall) {
        throw Error(
            "OVERALL has no model of its own: it is derived from the simplicity and meaning predictions "
            "(GOOD if both are GOOD, BAD if either is BAD, OK otherwise). Train those two aspects instead.");
    }
}

AspectLabel label_of(const Probabilities& p, double tau) {
    return predict_label(p, ThresholdPolicy(tau));
}

// ---- commands --------------------------------------------------------------

struct BuildLmCmd {
    CommonOptions common;
    std::string corpus;
    std::size_t order = 3;
    double alpha = NGramModel::kDefaultAlpha;
    std::string out;

    void run() {
        const fs::path in = resolve_input("--corpus", require("--corpus", corpus));
        require("--out", out);
        NGramModel lm = build_lm_from(in, order, alpha);
        write_output(common.out_dir, out, [&](std::ostream& os) { lm.save(os); });
        std::cout << "N\t" << lm.total_unigrams() << "\nV\t" << lm.vocab_size() << '\n';
        for (std::size_t n = 1; n <= lm.order(); ++n) {
            std::cout << n << "-grams\t" << lm.distinct(n) << '\n';
        }
    }
};

struct BuildFreqCmd {
    CommonOptions common;
    TextOptions text;
    std::string corpus;
    std::string name = "corpus";
    std::string out;

    void run() {
        const fs::path in = resolve_input("--corpus", require("--corpus", corpus));
        require("--out", out);
        TextSetup setup(text);
        std::ifstream is(in, std::ios::binary);
        if (!is) {
            throw Error("cannot open " + in.string());
        }
        FrequencyTable table = build_frequency_table(is, name, setup.preprocessor());
        if (table.total() == 0) {
            std::cerr << "warning: " << in.string() << " contains no content words; the table is empty\n";
        }
        write_output(common.out_dir, out, [&](std::ostream& os) { table.save(os); });
    }
};

struct ExtractCmd {
    CommonOptions common;
    TextOptions text;
    ResourceOptions res;
    std::string dataset;
    std::string idf;
    std::string out;

    void run() {
        const fs::path ds_path = resolve_input("--dataset", require("--dataset", dataset));
        const ResolvedResources rr = resolve_resources(res);
        const auto idf_path = resolve_optional("--idf", idf);
        TextSetup setup(text);
        const Dataset ds = load_dataset(ds_path);
        const Preprocessor& pre = setup.preprocessor();
        const ResourceBundle bundle = load_resources(rr, res.lm_order, pre);
        const auto analyzed = analyze(ds.pairs, pre, common.jobs);
        const IdfTable table = idf_path ? IdfTable::load(*idf_path) : build_idf(analyzed);
        const auto rows = extract_features(analyzed, bundle, table, common.jobs);
        write_output(common.out_dir, out, [&](std::ostream& os) { write_feature_dump(os, rows); });
    }
};

struct TrainCmd {
    CommonOptions common;
    TextOptions text;
    ResourceOptions res;
    ForestOptions forest;
    std::string dataset;
    std::string aspect;
    std::string out;
    std::string idf_out;

    void run() {
        const Aspect a = aspect_from(aspect);
        check_trainable(a);
        const fs::path ds_path = resolve_input("--dataset", require("--dataset", dataset));
        require("--out", out);
        const ResolvedResources rr = resolve_resources(res);
        TextSetup setup(text);
        const Dataset ds = load_dataset(ds_path);
        const auto gold = gold_labels(ds, a);
        const Preprocessor& pre = setup.preprocessor();
        const ResourceBundle bundle = load_resources(rr, res.lm_order, pre);
        const auto analyzed = analyze(ds.pairs, pre, common.jobs);
        const IdfTable table = a == Aspect::Simplicity ? build_idf(analyzed) : IdfTable{};
        const auto rows = extract_features(analyzed, bundle, table, common.jobs);
        FeatureMatrix m = feature_matrix(rows, a);
        const RandomForest rf = train_forest(m.rows, gold, a, m.names, forest.params(), common.seed, common.jobs);
        write_output(common.out_dir, out, [&](std::ostream& os) { rf.save(os); });
        if (a == Aspect::Simplicity) {
            const std::string idf_file = idf_out.empty() ? out + ".idf" : idf_out;
            write_output(common.out_dir, idf_file, [&](std::ostream& os) { table.save(os); });
        }
    }
};

struct PredictCmd {
    CommonOptions common;
    TextOptions text;
    ResourceOptions res;
    std::string dataset;
    std::string aspect;
    std::string model;
    std::string simplicity_model;
    std::string meaning_model;
    std::string idf;
    double tau = 0.5;
    std::string out;

    static RandomForest load_model(const fs::path& p, Aspect expected) {
        RandomForest rf = RandomForest::load(p);
        if (rf.aspect() != expected) {
            throw Error(p.string() + " is a " + std::string(to_string(rf.aspect())) + " model, expected " +
                        std::string(to_string(expected)));
        }
        const auto names = feature_names(expected);
        if (!std::equal(names.begin(), names.end(), rf.feature_names().begin(), rf.feature_names().end())) {
            throw Error(p.string() + ": feature manifest does not match this build's " +
                        std::string(to_string(expected)) + " features");
        }
        return rf;
    }

    void run() {
        const Aspect a = aspect_from(aspect);
        static_cast<void>(ThresholdPolicy{tau});
        const fs::path ds_path = resolve_input("--dataset", require("--dataset", dataset));
        std::optional<fs::path> main_model, simp_model, mean_model;
        if (a == Aspect::Overall) {
            if (simplicity_model.empty() || meaning_model.empty()) {
                throw Error(
                    "predicting OVERALL needs both --simplicity-model and --meaning-model: the overall label is "
                    "derived from the simplicity and meaning predictions (GOOD if both are GOOD, BAD if either "
                    "is BAD, OK otherwise)");
            }
            simp_model = resolve_input("--simplicity-model", simplicity_model);
            mean_model = resolve_input("--meaning-model", meaning_model);
        } else {
            main_model = resolve_input("--model", require("--model", model));
        }
        const bool needs_idf = a == Aspect::Simplicity || a == Aspect::Overall;
        std::optional<fs::path> idf_path;
        if (needs_idf) {
            const fs::path& simp = a == Aspect::Overall ? *simp_model : *main_model;
            idf_path = resolve_input("--idf", idf.empty() ? simp.string() + ".idf" : idf);
        }
        const ResolvedResources rr = resolve_resources(res);
        TextSetup setup(text);

        const Dataset ds = load_dataset(ds_path);
        const Preprocessor& pre = setup.preprocessor();
        const ResourceBundle bundle = load_resources(rr, res.lm_order, pre);
        const IdfTable table = idf_path ? IdfTable::load(*idf_path) : IdfTable{};
        const auto analyzed = analyze(ds.pairs, pre, common.jobs);
        const auto rows = extract_features(analyzed, bundle, table, common.jobs);

        std::vector<PredictionRow> preds;
        preds.reserve(ds.pairs.size());
        if (a == Aspect::Overall) {
            const RandomForest simp = load_model(*simp_model, Aspect::Simplicity);
            const RandomForest mean = load_model(*mean_model, Aspect::Meaning);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto s = label_of(simp.predict_proba(rows[i].simplicity.values), tau);
                const auto m = label_of(mean.predict_proba(rows[i].meaning.values), tau);
                preds.push_back({ds.pairs[i].id, a, ds.pairs[i].label(a), predict_overall(s, m), std::nullopt});
            }
        } else {
            const RandomForest rf = load_model(*main_model, a);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const Probabilities p = rf.predict_proba(rows[i].for_aspect(a).values);
                preds.push_back({ds.pairs[i].id, a, ds.pairs[i].label(a), label_of(p, tau), p});
            }
        }
        write_output(common.out_dir, out, [&](std::ostream& os) { write_predictions(os, preds); });
    }
};

struct CvCmd {
    CommonOptions common;
    TextOptions text;
    ResourceOptions res;
    ForestOptions forest;
    std::string dataset;
    std::string aspect;
    std::size_t k = 10;
    std::vector<double> taus{0.5};
    bool tsv = false;
    bool per_fold = false;
    bool confusion = false;
    std::string out;
    std::string predictions_out;

    void run() {
        const Aspect a = aspect_from(aspect);
        for (double t : taus) {
            static_cast<void>(ThresholdPolicy{t});
        }
        const fs::path ds_path = resolve_input("--dataset", require("--dataset", dataset));
        const ResolvedResources rr = resolve_resources(res);
        TextSetup setup(text);
        const Dataset ds = load_dataset(ds_path);
        const Preprocessor& pre = setup.preprocessor();
        const ResourceBundle bundle = load_resources(rr, res.lm_order, pre);

        CvConfig cfg;
        cfg.k = k;
        cfg.seed = common.seed;
        cfg.forest = forest.params();
        cfg.taus = taus;
        cfg.jobs = common.jobs;
        const CvResult result = cross_validate(ds, a, bundle, pre, cfg);

        std::vector<EvaluationReport> rows;
        for (const auto& run : result.runs) {
            rows.push_back(run.pooled);
            if (per_fold) {
                rows.insert(rows.end(), run.per_fold.begin(), run.per_fold.end());
            }
        }
        write_output(common.out_dir, out, [&](std::ostream& os) {
            os << (tsv ? render_report_tsv(rows) : render_report(rows));
            if (confusion) {
                for (const auto& run : result.runs) {
                    os << '\n' << render_confusion(run.pooled);
                }
            }
        });
        if (!predictions_out.empty()) {
            std::vector<PredictionRow> all;
            for (const auto& run : result.runs) {
                all.insert(all.end(), run.predictions.begin(), run.predictions.end());
            }
            write_output(common.out_dir, predictions_out, [&](std::ostream& os) { write_predictions(os, all); });
        }
    }
};

struct EvaluateCmd {
    CommonOptions common;
    std::string gold;
    std::string pred;
    std::string name;
    bool tsv = false;
    bool confusion = false;
    std::string out;

    void run() {
        const fs::path gold_path = resolve_input("--gold", require("--gold", gold));
        const fs::path pred_path = resolve_input("--pred", require("--pred", pred));
        const Dataset ds = load_dataset(gold_path);
        const auto preds = parse_predictions(read_file(pred_path), pred_path.string());
        if (preds.empty()) {
            throw Error(pred_path.string() + ": no predictions");
        }
        std::vector<EvaluationReport> reports;
        for (Aspect a : kAllAspects) {
            std::vector<AspectLabel> g, p;
            for (const auto& row : preds) {
                if (row.aspect != a) {
                    continue;
                }
                const auto idx = ds.find(row.pair_id);
                if (!idx) {
                    throw Error(pred_path.string() + ": pair '" + row.pair_id + "' is not in " + gold_path.string());
                }
                const auto& label = ds.pairs[*idx].label(a);
                if (!label) {
                    throw Error(gold_path.string() + ": pair '" + row.pair_id + "' has no " +
                                std::string(to_string(a)) + " label");
                }
                g.push_back(*label);
                p.push_back(row.pred);
            }
            if (!g.empty()) {
                const std::string run = (name.empty() ? pred_path.stem().string() : name) + "-" +
                                        std::string(to_string(a));
                reports.push_back(evaluate(a, run, g, p));
            }
        }
        write_output(common.out_dir, out, [&](std::ostream& os) {
            os << (tsv ? render_report_tsv(reports) : render_report(reports));
            if (confusion) {
                for (const auto& r : reports) {
                    os << '\n' << render_confusion(r);
                }
            }
        });
    }
};

struct StatsCmd {
    CommonOptions common;
    std::string dataset;
    std::string out;

    void run() {
        const fs::path ds_path = resolve_input("--dataset", require("--dataset", dataset));
        const Dataset ds = load_dataset(ds_path);
        write_output(common.out_dir, out, [&](std::ostream& os) { os << render_stats(dataset_stats(ds)); });
    }
};

CLI::App* subcommand(CLI::App& app, const std::string& name, const std::string& description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->option_defaults()->always_capture_default();
    return cmd;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quality estimation for sentence simplification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every command");

    BuildLmCmd build_lm;
    BuildFreqCmd build_freq;
    ExtractCmd extract;
    TrainCmd train;
    PredictCmd predict;
    CvCmd cv;
    EvaluateCmd evaluate_cmd;
    StatsCmd stats;

    std::vector<std::pair<CLI::App*, std::function<void()>>> commands;
    std::vector<std::string*> configs;
    auto reg = [&](CLI::App* cmd, CommonOptions& common, std::function<void()> fn) {
        commands.emplace_back(cmd, std::move(fn));
        configs.push_back(&common.config);
    };

    {
        auto* c = subcommand(app, "build-lm", "Train an n-gram LM from a sentence-per-line corpus");
        c->add_option("--corpus", build_lm.corpus, "Corpus file, one sentence per line");
        c->add_option("--order", build_lm.order, "N-gram order")->check(CLI::PositiveNumber);
        c->add_option("--alpha", build_lm.alpha, "Backoff weight")->check(CLI::Range(0.0, 1.0));
        c->add_option("--out", build_lm.out, "Model file to write");
        add_common(c, build_lm.common, false);
        reg(c, build_lm.common, [&] { build_lm.run(); });
    }
    {
        auto* c = subcommand(app, "build-freq", "Count content-word stems of a corpus");
        c->add_option("--corpus", build_freq.corpus, "Corpus file, one sentence per line");
        c->add_option("--name", build_freq.name, "Table name stored in the header");
        c->add_option("--out", build_freq.out, "Table file to write");
        add_text(c, build_freq.text);
        add_common(c, build_freq.common, false);
        reg(c, build_freq.common, [&] { build_freq.run(); });
    }
    {
        auto* c = subcommand(app, "extract", "Write the feature dump of a dataset");
        c->add_option("--dataset", extract.dataset, "Dataset TSV");
        c->add_option("--idf", extract.idf, "IDF table (default: built from the dataset)");
        c->add_option("--out", extract.out, "Feature TSV (default: standard output)");
        add_resources(c, extract.res);
        add_text(c, extract.text);
        add_common(c, extract.common, false);
        reg(c, extract.common, [&] { extract.run(); });
    }
    {
        auto* c = subcommand(app, "train", "Train the random forest of one aspect");
        c->add_option("--dataset", train.dataset, "Labelled dataset TSV");
        c->add_option("--aspect", train.aspect, "grammaticality, meaning or simplicity");
        c->add_option("--out", train.out, "Model file to write");
        c->add_option("--idf-out", train.idf_out, "IDF table for simplicity models (default: <out>.idf)");
        add_resources(c, train.res);
        add_forest(c, train.forest);
        add_text(c, train.text);
        add_common(c, train.common, true);
        reg(c, train.common, [&] { train.run(); });
    }
    {
        auto* c = subcommand(app, "predict", "Label a dataset with trained models");
        c->add_option("--dataset", predict.dataset, "Dataset TSV (labels optional)");
        c->add_option("--aspect", predict.aspect, "grammaticality, meaning, simplicity or overall");
        c->add_option("--model", predict.model, "Model for a single trainable aspect");
        c->add_option("--simplicity-model", predict.simplicity_model, "Simplicity model (overall)");
        c->add_option("--meaning-model", predict.meaning_model, "Meaning model (overall)");
        c->add_option("--idf", predict.idf, "IDF table (default: <simplicity model>.idf)");
        c->add_option("--tau", predict.tau, "Minimum winning-class probability; below it the label is OK");
        c->add_option("--out", predict.out, "Predictions TSV (default: standard output)");
        add_resources(c, predict.res);
        add_text(c, predict.text);
        add_common(c, predict.common, false);
        reg(c, predict.common, [&] { predict.run(); });
    }
    {
        auto* c = subcommand(app, "cv", "Stratified k-fold cross-validation of one aspect");
        c->add_option("--dataset", cv.dataset, "Labelled dataset TSV");
        c->add_option("--aspect", cv.aspect, "grammaticality, meaning, simplicity or overall");
        c->add_option("--k", cv.k, "Number of folds")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
        c->add_option("--taus", cv.taus, "Comma-separated thresholds, one report row each")->delimiter(',');
        c->add_flag("--tsv", cv.tsv, "Machine-readable report");
        c->add_flag("--per-fold", cv.per_fold, "Add a report row per fold");
        c->add_flag("--confusion", cv.confusion, "Append pooled confusion matrices");
        c->add_option("--out", cv.out, "Report file (default: standard output)");
        c->add_option("--predictions-out", cv.predictions_out, "Held-out predictions TSV");
        add_resources(c, cv.res);
        add_forest(c, cv.forest);
        add_text(c, cv.text);
        add_common(c, cv.common, true);
        reg(c, cv.common, [&] { cv.run(); });
    }
    {
        auto* c = subcommand(app, "evaluate", "Score a predictions TSV against gold labels");
        c->add_option("--gold", evaluate_cmd.gold, "Labelled dataset TSV");
        c->add_option("--pred", evaluate_cmd.pred, "Predictions TSV");
        c->add_option("--name", evaluate_cmd.name, "System name prefix (default: predictions file stem)");
        c->add_flag("--tsv", evaluate_cmd.tsv, "Machine-readable report");
        c->add_flag("--confusion", evaluate_cmd.confusion, "Append confusion matrices");
        c->add_option("--out", evaluate_cmd.out, "Report file (default: standard output)");
        add_common(c, evaluate_cmd.common, false);
        reg(c, evaluate_cmd.common, [&] { evaluate_cmd.run(); });
    }
    {
        auto* c = subcommand(app, "stats", "Label distribution per aspect, in percent");
        c->add_option("--dataset", stats.dataset, "Dataset TSV");
        c->add_option("--out", stats.out, "Output file (default: standard output)");
        add_common(c, stats.common, false);
        reg(c, stats.common, [&] { stats.run(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        for (std::size_t i = 0; i < commands.size(); ++i) {
            auto& [cmd, fn] = commands[i];
            if (!cmd->parsed()) {
                continue;
            }
            if (!configs[i]->empty()) {
                const fs::path cfg = resolve_input("--config", *configs[i]);
                cli::apply_config(*cmd, cli::read_config_file(cfg), cfg.string());
            }
            fn();
        }
    } catch (const std::exception& e) {
        std::cerr << "simpqe: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
