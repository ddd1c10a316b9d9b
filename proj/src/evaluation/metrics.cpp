#include "simpqe/evaluation/metrics.hpp"

#include <cmath>

#include "simpqe/util/error.hpp"

namespace simpqe {

namespace {

void check(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred) {
    if (gold.size() != pred.size()) {
        throw Error("gold and predicted label lists differ in length (" + std::to_string(gold.size()) + " vs " +
                    std::to_string(pred.size()) + ")");
    }
    if (gold.empty()) {
        throw Error("cannot score an empty label list");
    }
}

}  // namespace

double accuracy(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred) {
    check(gold, pred);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        hits += gold[i] == pred[i] ? 1 : 0;
    }
    return 100.0 * static_cast<double>(hits) / static_cast<double>(gold.size());
}

double mae(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred) {
    check(gold, pred);
    double sum = 0.0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        sum += std::abs(label_to_score(gold[i]) - label_to_score(pred[i]));
    }
    return sum / static_cast<double>(gold.size());
}

double rmse(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred) {
    check(gold, pred);
    double sum = 0.0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const double d = label_to_score(gold[i]) - label_to_score(pred[i]);
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(gold.size()));
}

ConfusionMatrix confusion_matrix(std::span<const AspectLabel> gold, std::span<const AspectLabel> pred) {
    check(gold, pred);
    ConfusionMatrix m{};
    for (std::size_t i = 0; i < gold.size(); ++i) {
        ++m[index_of(gold[i])][index_of(pred[i])];
    }
    return m;
}

EvaluationReport evaluate(Aspect aspect, std::string run_name, std::span<const AspectLabel> gold,
                          std::span<const AspectLabel> pred) {
    EvaluationReport r;
    r.aspect = aspect;
    r.run_name = std::move(run_name);
    r.accuracy_pct = accuracy(gold, pred);
    r.mae = mae(gold, pred);
    r.rmse = rmse(gold, pred);
    r.confusion = confusion_matrix(gold, pred);
    r.n = gold.size();
    return r;
}

}  // namespace simpqe
