#include "simpqe/corpus/dataset.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <unordered_set>

#include "simpqe/util/error.hpp"
#include "simpqe/util/rng.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

constexpr std::array<std::string_view, 7> kColumns{"id",      "original",   "simplified", "grammaticality",
                                                   "meaning", "simplicity", "overall"};

}  // namespace

std::optional<std::size_t> Dataset::find(const std::string& id) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].id == id) {
            return i;
        }
    }
    return std::nullopt;
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format) {
    (void)format;  // only one format exists
    return parse_dataset(read_file(path), path.string());
}

Dataset parse_dataset(std::string_view text, const std::string& source_name) {
    Dataset ds;
    ds.source_path = source_name;
    std::size_t columns = 0;
    std::unordered_set<std::string> seen;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (line_no == 1) {
            if (!line.empty() && line.substr(0, 3) == "\xEF\xBB\xBF") {
                line.remove_prefix(3);
            }
            const auto header = split(line, '\t');
            if (header.size() != 3 && header.size() != kColumns.size()) {
                throw ParseError(source_name, line_no, "header must have 3 or 7 tab-separated columns");
            }
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (!iequals_ascii(trim(header[i]), kColumns[i])) {
                    throw ParseError(source_name, line_no,
                                     "unexpected header column '" + std::string(header[i]) + "', expected '" +
                                         std::string(kColumns[i]) + "'");
                }
            }
            columns = header.size();
            return;
        }
        if (trim(line).empty()) {
            return;
        }
        const auto cells = split(line, '\t');
        if (cells.size() != columns) {
            throw ParseError(source_name, line_no,
                             "malformed row: expected " + std::to_string(columns) + " columns, found " +
                                 std::to_string(cells.size()));
        }
        SentencePair pair;
        pair.id = std::string(trim(cells[0]));
        pair.original = std::string(trim(cells[1]));
        pair.simplified = std::string(trim(cells[2]));
        if (pair.id.empty()) {
            throw ParseError(source_name, line_no, "empty id");
        }
        if (pair.original.empty() || pair.simplified.empty()) {
            throw ParseError(source_name, line_no, "empty sentence for id '" + pair.id + "'");
        }
        for (std::size_t a = 0; a + 3 < columns; ++a) {
            const auto cell = trim(cells[a + 3]);
            if (cell.empty()) {
                continue;
            }
            try {
                pair.labels[a] = parse_label(cell);
            } catch (const ParseError&) {
                throw ParseError(source_name, line_no, "unparseable label '" + std::string(cell) + "'");
            }
        }
        if (!seen.insert(pair.id).second) {
            throw ParseError(source_name, line_no, "duplicate id '" + pair.id + "'");
        }
        ds.pairs.push_back(std::move(pair));
    });
    if (columns == 0) {
        throw ParseError(source_name, 0, "missing header line");
    }
    return ds;
}

void write_dataset(std::ostream& out, const Dataset& ds) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        out << (i ? "\t" : "") << kColumns[i];
    }
    out << '\n';
    for (const auto& p : ds.pairs) {
        out << p.id << '\t' << p.original << '\t' << p.simplified;
        for (const auto& label : p.labels) {
            out << '\t';
            if (label) {
                out << to_string(*label);
            }
        }
        out << '\n';
    }
}

std::array<LabelDistribution, kNumAspects> dataset_stats(const Dataset& ds) {
    std::array<LabelDistribution, kNumAspects> stats;
    for (Aspect aspect : kAllAspects) {
        std::array<std::size_t, kNumLabels> counts{};
        std::size_t total = 0;
        for (const auto& p : ds.pairs) {
            if (const auto& l = p.label(aspect)) {
                ++counts[index_of(*l)];
                ++total;
            }
        }
        if (total == 0) {
            continue;
        }
        for (AspectLabel l : kAllLabels) {
            stats[index_of(aspect)][l] = 100.0 * static_cast<double>(counts[index_of(l)]) / static_cast<double>(total);
        }
    }
    return stats;
}

std::string render_stats(const std::array<LabelDistribution, kNumAspects>& stats) {
    std::ostringstream out;
    auto pad = [](std::string s, std::size_t width) {
        s.resize(std::max(width, s.size()), ' ');
        return s;
    };
    out << pad("Aspect", 22) << pad("Good", 8) << pad("Ok", 8) << "Bad\n";
    for (Aspect aspect : kAllAspects) {
        const auto& dist = stats[index_of(aspect)];
        out << pad(std::string(display_name(aspect)), 22);
        if (dist.empty()) {
            out << "-\n";
            continue;
        }
        out << pad(format_fixed(dist.at(AspectLabel::Good), 2), 8) << pad(format_fixed(dist.at(AspectLabel::Ok), 2), 8)
            << format_fixed(dist.at(AspectLabel::Bad), 2) << '\n';
    }
    return out.str();
}

Folds stratified_kfold(const Dataset& ds, Aspect aspect, std::size_t k, std::uint64_t seed) {
    if (k < 2) {
        throw Error("stratified_kfold: k must be at least 2");
    }
    if (k > ds.pairs.size()) {
        throw Error("stratified_kfold: k = " + std::to_string(k) + " exceeds the number of pairs (" +
                    std::to_string(ds.pairs.size()) + ")");
    }
    std::array<std::vector<std::size_t>, kNumLabels> by_class;
    for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
        const auto& l = ds.pairs[i].label(aspect);
        if (!l) {
            throw Error("stratified_kfold: pair '" + ds.pairs[i].id + "' has no " + std::string(to_string(aspect)) +
                        " label");
        }
        by_class[index_of(*l)].push_back(i);
    }

    Rng rng(seed);
    std::vector<std::vector<std::size_t>> members(k);
    std::size_t position = 0;
    for (auto& group : by_class) {
        rng.shuffle(std::span<std::size_t>(group));
        for (std::size_t idx : group) {
            members[position++ % k].push_back(idx);
        }
    }

    Folds folds(k);
    for (std::size_t f = 0; f < k; ++f) {
        std::sort(members[f].begin(), members[f].end());
        folds[f].reserve(members[f].size());
        for (std::size_t idx : members[f]) {
            folds[f].push_back(ds.pairs[idx].id);
        }
    }
    return folds;
}

}  // namespace simpqe
