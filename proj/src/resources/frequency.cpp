#include "simpqe/resources/frequency.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

constexpr std::string_view kMagic = "simpqe-freq";
constexpr std::string_view kVersion = "v1";

void check_name(const std::string& name) {
    if (name.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("frequency table name must not contain whitespace: '" + name + "'");
    }
}

}  // namespace

FrequencyTable::FrequencyTable(std::string name) : name_(std::move(name)) {
    check_name(name_);
}

std::uint64_t FrequencyTable::count(std::string_view stem) const {
    const auto it = counts_.find(stem);
    return it == counts_.end() ? 0 : it->second;
}

void FrequencyTable::add(std::string_view stem, std::uint64_t n) {
    if (n == 0) {
        return;
    }
    if (auto it = counts_.find(stem); it != counts_.end()) {
        it->second += n;
    } else {
        counts_.emplace(std::string(stem), n);
    }
    total_ += n;
}

void FrequencyTable::add_sentence(const TokenizedSentence& s) {
    for (const auto& t : s.tokens) {
        if (t.is_content()) {
            add(t.stem);
        }
    }
}

void FrequencyTable::save(std::ostream& out) const {
    out << kMagic << ' ' << kVersion << " total=" << total_ << " name=" << name_ << '\n';
    std::vector<const decltype(counts_)::value_type*> entries;
    entries.reserve(counts_.size());
    for (const auto& e : counts_) {
        entries.push_back(&e);
    }
    std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) { return a->first < b->first; });
    for (const auto* e : entries) {
        out << e->first << '\t' << e->second << '\n';
    }
}

void FrequencyTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write frequency table: " + path.string());
    }
    save(out);
}

FrequencyTable FrequencyTable::parse(std::string_view text, const std::string& source_name) {
    FrequencyTable table;
    std::uint64_t declared_total = 0;
    bool have_header = false;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (!have_header) {
            const auto words = split(line, ' ');
            if (words.size() < 2 || words[0] != kMagic) {
                throw ParseError(source_name, line_no, "not a simpqe frequency table");
            }
            if (words[1] != kVersion) {
                throw ParseError(source_name, line_no, "unsupported frequency table version '" + std::string(words[1]) + "'");
            }
            std::vector<std::pair<std::string, std::string>> fields;
            bool have_total = false;
            if (!parse_header_fields(line, 2, fields)) {
                throw ParseError(source_name, line_no, "malformed header");
            }
            for (const auto& [key, value] : fields) {
                if (key == "total" && parse_uint(value, declared_total)) {
                    have_total = true;
                } else if (key == "name") {
                    table.name_ = value;
                } else {
                    throw ParseError(source_name, line_no, "bad header field '" + key + "=" + value + "'");
                }
            }
            if (!have_total) {
                throw ParseError(source_name, line_no, "header must declare total");
            }
            have_header = true;
            return;
        }
        if (line.empty()) {
            return;
        }
        const auto cells = split(line, '\t');
        std::uint64_t c = 0;
        if (cells.size() != 2 || cells[0].empty() || !parse_uint(cells[1], c) || c == 0) {
            throw ParseError(source_name, line_no, "expected stem<TAB>positive-count");
        }
        if (table.count(cells[0]) != 0) {
            throw ParseError(source_name, line_no, "duplicate stem '" + std::string(cells[0]) + "'");
        }
        table.add(cells[0], c);
    });
    if (!have_header) {
        throw ParseError(source_name, 0, "empty frequency table file");
    }
    if (table.total_ != declared_total) {
        throw ParseError(source_name, 0, "counts sum to " + std::to_string(table.total_) + " but header declares total=" +
                                             std::to_string(declared_total));
    }
    return table;
}

FrequencyTable FrequencyTable::load(const std::filesystem::path& path) {
    return parse(read_file(path), path.string());
}

FrequencyTable build_frequency_table(std::istream& corpus, const std::string& name, const Preprocessor& pre) {
    FrequencyTable table(name);
    for_each_line(corpus, [&](std::size_t, std::string_view line) { table.add_sentence(pre(line)); });
    return table;
}

double avg_stem_frequency(const TokenizedSentence& s, const FrequencyTable& table) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& t : s.tokens) {
        if (t.is_content()) {
            sum += static_cast<double>(table.count(t.stem));
            ++n;
        }
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

}  // namespace simpqe
