#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "simpqe/evaluation/metrics.hpp"
#include "simpqe/model/decision_tree.hpp"

namespace simpqe {

/// Aligned table: System Name, Accuracy (2 decimals and %), MAE, RMSE (2 decimals). A footer
/// line naming the label-score mapping follows when there is at least one row.
std::string render_report(std::span<const EvaluationReport> reports);
/// Same columns, tab-separated, no footer.
std::string render_report_tsv(std::span<const EvaluationReport> reports);
/// Gold rows by predicted columns, with row and column labels.
std::string render_confusion(const EvaluationReport& report);

struct PredictionRow {
    std::string pair_id;
    Aspect aspect = Aspect::Grammaticality;
    std::optional<AspectLabel> gold;
    AspectLabel pred = AspectLabel::Ok;
    /// Absent for OVERALL, which is derived by rule rather than by a classifier.
    std::optional<Probabilities> proba;
};

/// `pair_id aspect gold pred p_good p_ok p_bad`; unknown cells are left empty.
void write_predictions(std::ostream& out, std::span<const PredictionRow> rows);
std::vector<PredictionRow> parse_predictions(std::string_view text, const std::string& source_name);

}  // namespace simpqe
