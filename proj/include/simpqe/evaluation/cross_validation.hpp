#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "simpqe/corpus/dataset.hpp"
#include "simpqe/evaluation/metrics.hpp"
#include "simpqe/evaluation/report.hpp"
#include "simpqe/features/features.hpp"
#include "simpqe/model/forest.hpp"

namespace simpqe {

struct FeatureMatrix {
    std::vector<std::string> names;
    /// One row per dataset pair, in dataset order.
    std::vector<std::vector<double>> rows;
};

/// Supplies the feature matrix of a trainable aspect for one fold. `train` lists the dataset
/// indices of the training pairs; anything dataset-derived must come from those pairs only.
using FoldFeatureSource =
    std::function<FeatureMatrix(Aspect aspect, std::size_t fold, std::span<const std::size_t> train)>;

/// Sees the exact documents each fold passes to build_idf.
class CvObserver {
public:
    virtual ~CvObserver() = default;
    virtual void on_idf_build(std::size_t fold, std::span<const AnalyzedPair> documents,
                              std::span<const std::string> held_out_ids) = 0;
};

struct CvConfig {
    std::size_t k = 10;
    std::uint64_t seed = 42;
    ForestParams forest;
    /// One report row per tau. For OVERALL the same tau labels both the simplicity and the
    /// meaning predictions before the rules combine them.
    std::vector<double> taus{0.5};
    /// Folds processed in parallel; results do not depend on it.
    std::size_t jobs = 1;
};

struct CvRun {
    double tau = 0.5;
    EvaluationReport pooled;
    std::vector<EvaluationReport> per_fold;
    /// Held-out predictions in dataset order.
    std::vector<PredictionRow> predictions;
};

struct CvResult {
    Aspect aspect = Aspect::Grammaticality;
    Folds folds;
    std::vector<CvRun> runs;
};

/// Report row name, e.g. "Simplicity-RF-0.6" or "Overall-rules-0.6".
std::string run_name(Aspect aspect, double tau);

/// Master seed of the forest trained for `aspect` in `fold`.
std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold, Aspect aspect);

/// k-fold CV with stratified folds on `aspect`. For each fold, trains on the other folds and
/// predicts the held-out one; pooled predictions give the aggregate report. OVERALL trains
/// simplicity and meaning forests per fold and combines their labels with predict_overall.
CvResult cross_validate(const Dataset& ds, Aspect aspect, const FoldFeatureSource& features, const CvConfig& config);

/// Full pipeline: preprocesses every pair once, then per fold builds the IDF table from the
/// training pairs only and extracts features for all pairs.
CvResult cross_validate(const Dataset& ds, Aspect aspect, const ResourceBundle& resources, const Preprocessor& pre,
                        const CvConfig& config, CvObserver* observer = nullptr);

/// Gold labels for `aspect`; throws Error naming the first pair without one.
std::vector<AspectLabel> gold_labels(const Dataset& ds, Aspect aspect);

/// Rows of `aspect`'s feature vector with its fixed names.
FeatureMatrix feature_matrix(std::span<const PairFeatures> features, Aspect aspect);

}  // namespace simpqe
