#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "simpqe/corpus/labels.hpp"

namespace simpqe {

/// confusion[gold][predicted], indexed by index_of(label).
using ConfusionMatrix = std::array<std::array<std::size_t, kNumLabels>, kNumLabels>;

// All metrics throw Error when the lists differ in length or are empty.
// Error scores use label_to_score (GOOD 100, OK 50, BAD 0).

/// Percentage of positions where pred equals gold.
double accuracy(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred);
double mae(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred);
double rmse(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred);
ConfusionMatrix confusion_matrix(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred);

struct EvaluationReport {
    Aspect aspect = Aspect::Grammaticality;
    std::string run_name;
    double accuracy_pct = 0.0;
    double mae = 0.0;
    double rmse = 0.0;
    ConfusionMatrix confusion{};
    std::size_t n = 0;
};

EvaluationReport evaluate(Aspect aspect, std::string run_name, std::span<const AspectLabel> gold,
                          std::span<const AspectLabel> pred);

}  // namespace simpqe
