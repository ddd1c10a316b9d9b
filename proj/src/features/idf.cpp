#include "simpqe/features/idf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <vector>

#include "simpqe/features/features.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

std::uint64_t IdfTable::document_frequency(std::string_view stem) const {
    const auto it = df_.find(stem);
    return it == df_.end() ? 0 : it->second;
}

double IdfTable::idf(std::string_view stem) const {
    const auto d = static_cast<double>(documents_);
    const auto df = static_cast<double>(document_frequency(stem));
    return std::log((d + 1.0) / (df + 1.0)) + 1.0;
}

void IdfTable::add_document(const TokenizedSentence& s) {
    ++documents_;
    std::set<std::string_view> stems;
    for (const auto& t : s.tokens) {
        if (t.is_content()) {
            stems.insert(t.stem);
        }
    }
    for (auto stem : stems) {
        if (auto it = df_.find(stem); it != df_.end()) {
            ++it->second;
        } else {
            df_.emplace(std::string(stem), 1);
        }
    }
}

void IdfTable::save(std::ostream& out) const {
    out << "simpqe-idf v1 D=" << documents_ << '\n';
    std::vector<const decltype(df_)::value_type*> entries;
    for (const auto& e : df_) entries.push_back(&e);
    std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) { return a->first < b->first; });
    for (const auto* e : entries) {
        out << e->first << '\t' << e->second << '\n';
    }
}

void IdfTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write IDF table: " + path.string());
    }
    save(out);
}

IdfTable IdfTable::parse(std::string_view text, const std::string& source_name) {
    IdfTable table;
    bool have_header = false;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (!have_header) {
            const auto words = split(line, ' ');
            if (words.size() != 3 || words[0] != "simpqe-idf") {
                throw ParseError(source_name, line_no, "not a simpqe IDF table");
            }
            if (words[1] != "v1") {
                throw ParseError(source_name, line_no, "unsupported IDF table version '" + std::string(words[1]) + "'");
            }
            if (words[2].substr(0, 2) != "D=" || !parse_uint(words[2].substr(2), table.documents_)) {
                throw ParseError(source_name, line_no, "header must declare D=<documents>");
            }
            have_header = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        const auto cells = split(line, '\t');
        std::uint64_t df = 0;
        if (cells.size() != 2 || cells[0].empty() || !parse_uint(cells[1], df) || df == 0 || df > table.documents_) {
            throw ParseError(source_name, line_no, "expected stem<TAB>df with 1 <= df <= D");
        }
        if (!table.df_.emplace(std::string(cells[0]), df).second) {
            throw ParseError(source_name, line_no, "duplicate stem '" + std::string(cells[0]) + "'");
        }
    });
    if (!have_header) {
        throw ParseError(source_name, 0, "empty IDF table file");
    }
    return table;
}

IdfTable IdfTable::load(const std::filesystem::path& path) {
    return parse(read_file(path), path.string());
}

IdfTable build_idf(std::span<const AnalyzedPair> pairs) {
    if (pairs.empty()) {
        throw Error("build_idf: empty dataset");
    }
    IdfTable table;
    for (const auto& p : pairs) {
        table.add_document(p.original);
        table.add_document(p.simplified);
    }
    return table;
}

}  // namespace simpqe
