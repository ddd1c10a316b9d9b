#include "simpqe/model/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "simpqe/util/error.hpp"

namespace simpqe {

namespace {

LabelCounts count_labels(std::span<const AspectLabel> y, std::span<const std::size_t> sample) {
    LabelCounts c{};
    for (std::size_t i : sample) {
        ++c[index_of(y[i])];
    }
    return c;
}

// n * Gini, written as n - sum c^2 / n.
double scaled_gini(const LabelCounts& c, std::uint32_t n) {
    if (n == 0) return 0.0;
    double sq = 0.0;
    for (auto v : c) sq += static_cast<double>(v) * static_cast<double>(v);
    return static_cast<double>(n) - sq / static_cast<double>(n);
}

struct Split {
    std::size_t feature = 0;
    double threshold = 0.0;
    double impurity = 0.0;
};

class TreeGrower {
public:
    TreeGrower(std::span<const std::vector<double>> X, std::span<const AspectLabel> y, const TreeParams& params,
               Rng& rng)
        : X_(X), y_(y), params_(params), rng_(rng), n_features_(X.front().size()) {
        draw_ = params.features_per_split == 0
                    ? static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_features_))))
                    : params.features_per_split;
        draw_ = std::clamp<std::size_t>(draw_, 1, n_features_);
        feature_pool_.resize(n_features_);
    }

    std::vector<DecisionTree::Node> grow(std::vector<std::size_t> sample) {
        build(sample, 0);
        return std::move(nodes_);
    }

private:
    void build(std::vector<std::size_t>& sample, std::size_t depth) {
        const std::size_t index = nodes_.size();
        nodes_.emplace_back();
        const LabelCounts counts = count_labels(y_, sample);
        nodes_[index].counts = counts;

        const bool pure = std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }) <= 1;
        const bool depth_reached = params_.max_depth > 0 && depth >= params_.max_depth;
        if (pure || depth_reached || sample.size() < params_.min_samples_split || sample.size() < 2) {
            return;
        }
        const auto split = best_split(sample, counts);
        if (!split) {
            return;
        }

        std::vector<std::size_t> left;
        std::vector<std::size_t> right;
        for (std::size_t i : sample) {
            (X_[i][split->feature] <= split->threshold ? left : right).push_back(i);
        }
        sample.clear();
        sample.shrink_to_fit();

        nodes_[index].feature = static_cast<std::int32_t>(split->feature);
        nodes_[index].threshold = split->threshold;
        build(left, depth + 1);
        nodes_[index].right = static_cast<std::uint32_t>(nodes_.size());
        build(right, depth + 1);
    }

    std::vector<std::size_t> draw_features() {
        std::iota(feature_pool_.begin(), feature_pool_.end(), std::size_t{0});
        for (std::size_t i = 0; i < draw_; ++i) {
            const auto j = i + static_cast<std::size_t>(rng_.below(n_features_ - i));
            std::swap(feature_pool_[i], feature_pool_[j]);
        }
        std::vector<std::size_t> chosen(feature_pool_.begin(), feature_pool_.begin() + static_cast<std::ptrdiff_t>(draw_));
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    std::optional<Split> best_split(const std::vector<std::size_t>& sample, const LabelCounts& total) {
        const auto n = static_cast<std::uint32_t>(sample.size());
        std::optional<Split> best;
        std::vector<std::size_t> order(sample);
        for (std::size_t f : draw_features()) {
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return X_[a][f] < X_[b][f]; });
            LabelCounts left{};
            for (std::uint32_t pos = 0; pos + 1 < n; ++pos) {
                ++left[index_of(y_[order[pos]])];
                const double lo = X_[order[pos]][f];
                const double hi = X_[order[pos + 1]][f];
                if (!(lo < hi)) {
                    continue;
                }
                LabelCounts right{};
                for (std::size_t c = 0; c < kNumLabels; ++c) right[c] = total[c] - left[c];
                const std::uint32_t n_left = pos + 1;
                const double impurity = scaled_gini(left, n_left) + scaled_gini(right, n - n_left);
                if (!best || impurity < best->impurity) {
                    double threshold = lo + (hi - lo) / 2.0;
                    if (!(threshold < hi)) threshold = lo;
                    best = Split{f, threshold, impurity};
                }
            }
        }
        return best;
    }

    std::span<const std::vector<double>> X_;
    std::span<const AspectLabel> y_;
    TreeParams params_;
    Rng& rng_;
    std::size_t n_features_;
    std::size_t draw_ = 1;
    std::vector<std::size_t> feature_pool_;
    std::vector<DecisionTree::Node> nodes_;
};

void validate(std::span<const std::vector<double>> X, std::span<const AspectLabel> y) {
    if (X.empty()) {
        throw Error("cannot train a tree on an empty sample");
    }
    if (X.size() != y.size()) {
        throw Error("feature rows and labels differ in length");
    }
    const std::size_t m = X.front().size();
    if (m == 0) {
        throw Error("feature vectors are empty");
    }
    for (const auto& row : X) {
        if (row.size() != m) {
            throw Error("feature vectors have inconsistent lengths");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw Error("feature vectors contain a non-finite value");
            }
        }
    }
}

}  // namespace

double gini(const LabelCounts& counts) {
    std::uint32_t n = 0;
    for (auto c : counts) n += c;
    return n == 0 ? 0.0 : scaled_gini(counts, n) / static_cast<double>(n);
}

DecisionTree::DecisionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

std::size_t DecisionTree::depth() const {
    // Preorder layout: the depth of node i+1 or right(i) is depth(i) + 1.
    std::vector<std::size_t> d(nodes_.size(), 0);
    std::size_t deepest = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        deepest = std::max(deepest, d[i]);
        if (!nodes_[i].is_leaf()) {
            d[i + 1] = d[i] + 1;
            d[nodes_[i].right] = d[i] + 1;
        }
    }
    return deepest;
}

const DecisionTree::Node& DecisionTree::leaf_for(std::span<const double> x) const {
    std::size_t i = 0;
    while (!nodes_[i].is_leaf()) {
        const auto& node = nodes_[i];
        i = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? i + 1 : node.right;
    }
    return nodes_[i];
}

Probabilities DecisionTree::predict_proba(std::span<const double> x) const {
    const auto& counts = leaf_for(x).counts;
    double total = 0.0;
    for (auto c : counts) total += c;
    Probabilities p{};
    for (std::size_t c = 0; c < kNumLabels; ++c) {
        p[c] = static_cast<double>(counts[c]) / total;
    }
    return p;
}

DecisionTree grow_tree(std::span<const std::vector<double>> X, std::span<const AspectLabel> y,
                       std::span<const std::size_t> sample, const TreeParams& params, Rng& rng) {
    validate(X, y);
    if (sample.empty()) {
        throw Error("cannot grow a tree from an empty sample");
    }
    TreeGrower grower(X, y, params, rng);
    return DecisionTree(grower.grow(std::vector<std::size_t>(sample.begin(), sample.end())));
}

DecisionTree train_tree(std::span<const std::vector<double>> X, std::span<const AspectLabel> y,
                        const TreeParams& params, std::uint64_t seed) {
    validate(X, y);
    std::vector<std::size_t> all(X.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    Rng rng(seed);
    return grow_tree(X, y, all, params, rng);
}

}  // namespace simpqe
