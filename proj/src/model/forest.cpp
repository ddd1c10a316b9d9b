#include "simpqe/model/forest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "simpqe/util/error.hpp"
#include "simpqe/util/parallel.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

constexpr std::string_view kMagic = "simpqe-rf";
constexpr std::string_view kVersion = "v1";

}  // namespace

RandomForest::RandomForest(Aspect aspect, std::vector<std::string> feature_names, ForestParams params,
                           std::uint64_t master_seed, std::vector<DecisionTree> trees)
    : aspect_(aspect),
      feature_names_(std::move(feature_names)),
      params_(params),
      master_seed_(master_seed),
      trees_(std::move(trees)) {
    if (trees_.size() != params_.n_trees) {
        throw Error("forest has " + std::to_string(trees_.size()) + " trees but n_trees = " +
                    std::to_string(params_.n_trees));
    }
}

Probabilities RandomForest::predict_proba(std::span<const double> x) const {
    if (x.size() != feature_names_.size()) {
        throw Error("feature vector has " + std::to_string(x.size()) + " values, model expects " +
                    std::to_string(feature_names_.size()));
    }
    Probabilities sum{};
    for (const auto& tree : trees_) {
        const auto p = tree.predict_proba(x);
        for (std::size_t c = 0; c < kNumLabels; ++c) sum[c] += p[c];
    }
    for (auto& v : sum) v /= static_cast<double>(trees_.size());
    return sum;
}

void RandomForest::save(std::ostream& out) const {
    out << kMagic << ' ' << kVersion << " aspect=" << to_string(aspect_) << " n_trees=" << params_.n_trees
        << " seed=" << master_seed_ << '\n';
    out << "params max_depth=" << params_.tree.max_depth << " min_samples_split=" << params_.tree.min_samples_split
        << " features_per_split=" << params_.tree.features_per_split << '\n';
    out << "features " << feature_names_.size() << '\n';
    for (const auto& name : feature_names_) {
        out << "name " << name << '\n';
    }
    for (std::size_t t = 0; t < trees_.size(); ++t) {
        const auto& nodes = trees_[t].nodes();
        out << "tree " << t << " nodes=" << nodes.size() << '\n';
        for (const auto& n : nodes) {
            if (n.is_leaf()) {
                out << "L " << n.counts[0] << ' ' << n.counts[1] << ' ' << n.counts[2] << '\n';
            } else {
                out << "S " << n.feature << ' ' << format_exact(n.threshold) << ' ' << n.counts[0] << ' '
                    << n.counts[1] << ' ' << n.counts[2] << '\n';
            }
        }
    }
    out << "end\n";
}

std::string RandomForest::serialize() const {
    std::ostringstream out;
    save(out);
    return out.str();
}

void RandomForest::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write model file: " + path.string());
    }
    out << serialize();
    if (!out) {
        throw Error("failed writing model file: " + path.string());
    }
}

RandomForest RandomForest::load(const std::filesystem::path& path) {
    return parse(read_file(path), path.string());
}

RandomForest RandomForest::parse(std::string_view text, const std::string& source_name) {
    std::vector<std::string_view> lines;
    for_each_line(text, [&](std::size_t, std::string_view line) { lines.push_back(line); });
    std::size_t cursor = 0;
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(source_name, cursor, what); };
    auto next = [&]() -> std::vector<std::string_view> {
        if (cursor >= lines.size()) {
            ++cursor;
            throw fail("unexpected end of file (truncated model)");
        }
        std::vector<std::string_view> words;
        for (auto w : split(lines[cursor++], ' ')) {
            if (!w.empty()) words.push_back(w);
        }
        return words;
    };
    auto field_uint = [&](std::string_view token, std::string_view key) {
        std::uint64_t v = 0;
        if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=' ||
            !parse_uint(token.substr(key.size() + 1), v)) {
            throw fail("expected " + std::string(key) + "=<integer>, found '" + std::string(token) + "'");
        }
        return v;
    };

    auto header = next();
    if (header.size() < 2 || header[0] != kMagic) {
        throw fail("not a simpqe random-forest model");
    }
    if (header[1] != kVersion) {
        throw fail("unsupported model version '" + std::string(header[1]) + "'");
    }
    if (header.size() != 5 || header[2].substr(0, 7) != "aspect=") {
        throw fail("malformed model header");
    }
    Aspect aspect{};
    try {
        aspect = parse_aspect(header[2].substr(7));
    } catch (const Error& e) {
        throw fail(e.what());
    }
    ForestParams params;
    params.n_trees = field_uint(header[3], "n_trees");
    const std::uint64_t seed = field_uint(header[4], "seed");

    auto param_line = next();
    if (param_line.size() != 4 || param_line[0] != "params") {
        throw fail("expected params line");
    }
    params.tree.max_depth = field_uint(param_line[1], "max_depth");
    params.tree.min_samples_split = field_uint(param_line[2], "min_samples_split");
    params.tree.features_per_split = field_uint(param_line[3], "features_per_split");

    auto feature_line = next();
    std::uint64_t n_features = 0;
    if (feature_line.size() != 2 || feature_line[0] != "features" || !parse_uint(feature_line[1], n_features) ||
        n_features == 0) {
        throw fail("expected 'features <count>'");
    }
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < n_features; ++i) {
        auto words = next();
        if (words.size() != 2 || words[0] != "name") {
            throw fail("expected 'name <feature>'");
        }
        names.emplace_back(words[1]);
    }

    std::vector<DecisionTree> trees;
    for (std::size_t t = 0; t < params.n_trees; ++t) {
        auto tree_line = next();
        std::uint64_t index = 0;
        if (tree_line.size() != 3 || tree_line[0] != "tree" || !parse_uint(tree_line[1], index) || index != t) {
            throw fail("expected 'tree " + std::to_string(t) + " nodes=<n>'");
        }
        const std::uint64_t n_nodes = field_uint(tree_line[2], "nodes");
        if (n_nodes == 0) {
            throw fail("tree with no nodes");
        }
        std::vector<DecisionTree::Node> nodes(n_nodes);
        auto read_counts = [&](const std::vector<std::string_view>& words, std::size_t from, LabelCounts& counts) {
            std::uint64_t total = 0;
            for (std::size_t c = 0; c < kNumLabels; ++c) {
                std::uint64_t v = 0;
                if (!parse_uint(words[from + c], v) || v > UINT32_MAX) {
                    throw fail("bad class count '" + std::string(words[from + c]) + "'");
                }
                counts[c] = static_cast<std::uint32_t>(v);
                total += v;
            }
            if (total == 0) {
                throw fail("node with no samples");
            }
        };
        // Preorder decode: an explicit stack records split nodes still waiting for a right child.
        std::vector<std::size_t> pending;
        for (std::size_t i = 0; i < n_nodes; ++i) {
            auto words = next();
            auto& node = nodes[i];
            if (i > 0 && !nodes[i - 1].is_leaf()) {
                // left child of i - 1: nothing to patch
            } else if (i > 0) {
                if (pending.empty()) {
                    throw fail("tree has nodes beyond its last leaf");
                }
                nodes[pending.back()].right = static_cast<std::uint32_t>(i);
                pending.pop_back();
            }
            if (words.size() == 4 && words[0] == "L") {
                read_counts(words, 1, node.counts);
            } else if (words.size() == 6 && words[0] == "S") {
                std::int64_t feature = -1;
                if (!parse_int(words[1], feature) || feature < 0 || static_cast<std::uint64_t>(feature) >= n_features) {
                    throw fail("split feature index out of range");
                }
                if (!parse_double(words[2], node.threshold) || !std::isfinite(node.threshold)) {
                    throw fail("bad split threshold '" + std::string(words[2]) + "'");
                }
                read_counts(words, 3, node.counts);
                node.feature = static_cast<std::int32_t>(feature);
                pending.push_back(i);
            } else {
                throw fail("expected a node line ('L g o b' or 'S f t g o b')");
            }
        }
        if (!pending.empty() || !nodes.back().is_leaf()) {
            throw fail("tree " + std::to_string(t) + " is incomplete");
        }
        trees.emplace_back(std::move(nodes));
    }
    auto end_line = next();
    if (end_line.size() != 1 || end_line[0] != "end") {
        throw fail("expected 'end'");
    }
    return RandomForest(aspect, std::move(names), params, seed, std::move(trees));
}

RandomForest train_forest(std::span<const std::vector<double>> X, std::span<const AspectLabel> y, Aspect aspect,
                          std::vector<std::string> feature_names, ForestParams params, std::uint64_t master_seed,
                          std::size_t jobs) {
    if (X.empty()) {
        throw Error("cannot train a forest on an empty sample");
    }
    if (params.n_trees == 0) {
        throw Error("n_trees must be at least 1");
    }
    const std::size_t m = X.front().size();
    if (feature_names.size() != m) {
        throw Error("feature manifest has " + std::to_string(feature_names.size()) + " names for " +
                    std::to_string(m) + " features");
    }
    if (params.tree.features_per_split == 0) {
        params.tree.features_per_split = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))));
    }
    if (params.tree.features_per_split > m) {
        throw Error("features_per_split exceeds the feature count");
    }
    std::vector<DecisionTree> trees(params.n_trees);
    parallel_for(params.n_trees, jobs, [&](std::size_t i) {
        Rng rng(master_seed + i);
        std::vector<std::size_t> bootstrap(X.size());
        for (auto& idx : bootstrap) {
            idx = static_cast<std::size_t>(rng.below(X.size()));
        }
        trees[i] = grow_tree(X, y, bootstrap, params.tree, rng);
    });
    return RandomForest(aspect, std::move(feature_names), params, master_seed, std::move(trees));
}

ThresholdPolicy::ThresholdPolicy(double t) : tau(t) {
    if (!(t > 0.0 && t <= 1.0)) {
        throw Error("threshold tau must lie in (0, 1], got " + format_exact(t));
    }
}

AspectLabel predict_label(const Probabilities& proba, const ThresholdPolicy& policy) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < kNumLabels; ++c) {
        if (proba[c] > proba[best]) best = c;
    }
    return proba[best] >= policy.tau ? kAllLabels[best] : AspectLabel::Ok;
}

}  // namespace simpqe
