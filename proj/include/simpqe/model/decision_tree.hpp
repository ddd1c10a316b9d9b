#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simpqe/corpus/labels.hpp"
#include "simpqe/util/rng.hpp"

namespace simpqe {

using LabelCounts = std::array<std::uint32_t, kNumLabels>;
using Probabilities = std::array<double, kNumLabels>;

/// Gini impurity 1 - sum p_c^2 of a class-count vector (0 for an empty node).
double gini(const LabelCounts& counts);

struct TreeParams {
    /// 0 means unbounded.
    std::size_t max_depth = 0;
    std::size_t min_samples_split = 2;
    /// Features drawn at each node; 0 means ceil(sqrt(feature count)).
    std::size_t features_per_split = 0;
};

/// CART classification tree stored in preorder: an internal node at index i has its left
/// child at i + 1 and its right child at `right`. Values <= threshold go left.
class DecisionTree {
public:
    struct Node {
        // -1 marks a leaf.
        std::int32_t feature = -1;
        double threshold = 0.0;
        std::uint32_t right = 0;
        LabelCounts counts{};

        bool is_leaf() const { return feature < 0; }
        friend bool operator==(const Node&, const Node&) = default;
    };

    DecisionTree() = default;
    explicit DecisionTree(std::vector<Node> nodes);

    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t depth() const;

    const Node& leaf_for(std::span<const double> x) const;
    /// Normalised class counts of the leaf reached by x.
    Probabilities predict_proba(std::span<const double> x) const;

    friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

private:
    std::vector<Node> nodes_;
};

/// Grows one tree on the rows of X listed in `sample` (repeats allowed, as in a bootstrap).
/// At each node `features_per_split` distinct features are drawn from `rng`; candidate
/// thresholds are midpoints between consecutive distinct values; the split minimising the
/// weighted child Gini wins, ties going to the lower feature index and then the lower
/// threshold. Nodes stop splitting when pure, at max_depth, below min_samples_split, or
/// when no drawn feature separates the samples.
DecisionTree grow_tree(std::span<const std::vector<double>> X, std::span<const AspectLabel> y,
                       std::span<const std::size_t> sample, const TreeParams& params, Rng& rng);

/// grow_tree over every row, with Rng(seed) for feature draws. Throws Error on empty or
/// ragged input.
DecisionTree train_tree(std::span<const std::vector<double>> X, std::span<const AspectLabel> y,
                        const TreeParams& params, std::uint64_t seed);

}  // namespace simpqe
