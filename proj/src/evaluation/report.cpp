#include "simpqe/evaluation/report.hpp"

#include <algorithm>
#include <sstream>

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

std::string pad_right(std::string s, std::size_t width) {
    s.resize(std::max(width, s.size()), ' ');
    return s;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_report(std::span<const EvaluationReport> reports) {
    std::size_t name_width = std::string_view("System Name").size();
    for (const auto& r : reports) {
        name_width = std::max(name_width, r.run_name.size());
    }
    std::ostringstream out;
    out << pad_right("System Name", name_width) << "  " << pad_left("Accuracy", 8) << "  " << pad_left("MAE", 6)
        << "  " << pad_left("RMSE", 6) << '\n';
    for (const auto& r : reports) {
        out << pad_right(r.run_name, name_width) << "  " << pad_left(format_fixed(r.accuracy_pct, 2) + "%", 8) << "  "
            << pad_left(format_fixed(r.mae, 2), 6) << "  " << pad_left(format_fixed(r.rmse, 2), 6) << '\n';
    }
    if (!reports.empty()) {
        out << "(MAE/RMSE on label scores good=100 ok=50 bad=0)\n";
    }
    return out.str();
}

std::string render_report_tsv(std::span<const EvaluationReport> reports) {
    std::ostringstream out;
    out << "system\taspect\tn\taccuracy\tmae\trmse\n";
    for (const auto& r : reports) {
        out << r.run_name << '\t' << to_string(r.aspect) << '\t' << r.n << '\t' << format_fixed(r.accuracy_pct, 2)
            << '\t' << format_fixed(r.mae, 2) << '\t' << format_fixed(r.rmse, 2) << '\n';
    }
    return out.str();
}

std::string render_confusion(const EvaluationReport& report) {
    std::ostringstream out;
    out << pad_right("gold\\pred", 10);
    for (AspectLabel p : kAllLabels) out << pad_left(std::string(to_string(p)), 7);
    out << '\n';
    for (AspectLabel g : kAllLabels) {
        out << pad_right(std::string(to_string(g)), 10);
        for (AspectLabel p : kAllLabels) {
            out << pad_left(std::to_string(report.confusion[index_of(g)][index_of(p)]), 7);
        }
        out << '\n';
    }
    return out.str();
}

void write_predictions(std::ostream& out, std::span<const PredictionRow> rows) {
    out << "pair_id\taspect\tgold\tpred\tp_good\tp_ok\tp_bad\n";
    for (const auto& r : rows) {
        out << r.pair_id << '\t' << to_string(r.aspect) << '\t' << (r.gold ? to_string(*r.gold) : "") << '\t'
            << to_string(r.pred);
        for (std::size_t c = 0; c < kNumLabels; ++c) {
            out << '\t';
            if (r.proba) out << format_sig((*r.proba)[c], 10);
        }
        out << '\n';
    }
}

std::vector<PredictionRow> parse_predictions(std::string_view text, const std::string& source_name) {
    std::vector<PredictionRow> rows;
    bool header = false;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (!header) {
            if (!line.starts_with("pair_id\taspect\tgold\tpred")) {
                throw ParseError(source_name, line_no, "not a predictions file");
            }
            header = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        const auto cells = split(line, '\t');
        if (cells.size() != 7) {
            throw ParseError(source_name, line_no, "expected 7 columns");
        }
        try {
            PredictionRow r;
            r.pair_id = std::string(cells[0]);
            r.aspect = parse_aspect(cells[1]);
            if (!cells[2].empty()) r.gold = parse_label(cells[2]);
            r.pred = parse_label(cells[3]);
            if (!cells[4].empty() || !cells[5].empty() || !cells[6].empty()) {
                Probabilities p{};
                for (std::size_t c = 0; c < kNumLabels; ++c) {
                    if (!parse_double(cells[4 + c], p[c])) {
                        throw Error("bad probability '" + std::string(cells[4 + c]) + "'");
                    }
                }
                r.proba = p;
            }
            rows.push_back(std::move(r));
        } catch (const Error& e) {
            throw ParseError(source_name, line_no, e.what());
        }
    });
    if (!header) {
        throw ParseError(source_name, 0, "empty predictions file");
    }
    return rows;
}

}  // namespace simpqe
