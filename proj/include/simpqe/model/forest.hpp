#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "simpqe/corpus/labels.hpp"
#include "simpqe/model/decision_tree.hpp"

namespace simpqe {

struct ForestParams {
    std::size_t n_trees = 100;
    TreeParams tree;
};

/// Bagged CART ensemble with soft voting.
class RandomForest {
public:
    RandomForest(Aspect aspect, std::vector<std::string> feature_names, ForestParams params, std::uint64_t master_seed,
                 std::vector<DecisionTree> trees);

    Aspect aspect() const { return aspect_; }
    const std::vector<std::string>& feature_names() const { return feature_names_; }
    const ForestParams& params() const { return params_; }
    std::uint64_t master_seed() const { return master_seed_; }
    const std::vector<DecisionTree>& trees() const { return trees_; }

    /// Mean over trees of the per-tree leaf distribution. Throws Error on a length mismatch.
    Probabilities predict_proba(std::span<const double> x) const;

    /// Format `simpqe-rf v1`: header, parameter line, feature manifest, then one preorder
    /// node list per tree and a closing `end`.
    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    std::string serialize() const;
    static RandomForest parse(std::string_view text, const std::string& source_name);
    static RandomForest load(const std::filesystem::path& path);

private:
    Aspect aspect_;
    std::vector<std::string> feature_names_;
    ForestParams params_;
    std::uint64_t master_seed_;
    std::vector<DecisionTree> trees_;
};

/// Tree i is grown on a bootstrap sample of |X| rows drawn from Rng(master_seed + i), which
/// then continues as that tree's feature-draw stream. The result does not depend on `jobs`.
/// features_per_split = 0 is resolved to ceil(sqrt(m)) and stored resolved.
RandomForest train_forest(std::span<const std::vector<double>> X, std::span<const AspectLabel> y, Aspect aspect,
                          std::vector<std::string> feature_names, ForestParams params, std::uint64_t master_seed,
                          std::size_t jobs = 1);

/// Labelling rule for a class distribution.
struct ThresholdPolicy {
    /// Throws Error unless 0 < tau <= 1.
    explicit ThresholdPolicy(double tau = 0.5);
    double tau;
};

/// The most probable class (ties: GOOD, then OK, then BAD) if its probability reaches tau,
/// otherwise OK.
AspectLabel predict_label(const Probabilities& proba, const ThresholdPolicy& policy);

/// GOOD when both inputs are GOOD, BAD when either is BAD, OK otherwise.
constexpr AspectLabel predict_overall(AspectLabel simplicity, AspectLabel meaning) {
    if (simplicity == AspectLabel::Bad || meaning == AspectLabel::Bad) {
        return AspectLabel::Bad;
    }
    if (simplicity == AspectLabel::Good && meaning == AspectLabel::Good) {
        return AspectLabel::Good;
    }
    return AspectLabel::Ok;
}

}  // namespace simpqe
