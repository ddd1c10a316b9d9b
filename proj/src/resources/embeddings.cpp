#include "simpqe/resources/embeddings.hpp"

#include <cmath>

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

}  // namespace

bool EmbeddingTable::add(std::string word, std::span<const double> vector) {
    if (vector.size() != dim_) {
        throw Error("embedding for '" + word + "' has " + std::to_string(vector.size()) + " components, expected " +
                    std::to_string(dim_));
    }
    for (double v : vector) {
        if (!std::isfinite(v)) {
            throw Error("embedding for '" + word + "' has a non-finite component");
        }
    }
    if (index_.find(word) != index_.end()) {
        return false;
    }
    index_.emplace(std::move(word), data_.size());
    data_.insert(data_.end(), vector.begin(), vector.end());
    return true;
}

std::optional<std::span<const double>> EmbeddingTable::find(std::string_view word) const {
    const auto it = index_.find(word);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return std::span<const double>(data_.data() + it->second, dim_);
}

EmbeddingTable EmbeddingTable::parse(std::string_view text, const std::string& source_name) {
    EmbeddingTable table;
    std::uint64_t declared = 0;
    std::uint64_t rows = 0;
    bool have_header = false;
    std::vector<double> buffer;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto parts = fields(line);
        if (!have_header) {
            std::uint64_t dim = 0;
            if (parts.size() != 2 || !parse_uint(parts[0], declared) || !parse_uint(parts[1], dim) || dim == 0) {
                throw ParseError(source_name, line_no, "expected header '<count> <dim>'");
            }
            table.dim_ = dim;
            have_header = true;
            return;
        }
        if (parts.empty()) {
            return;
        }
        if (parts.size() != table.dim_ + 1) {
            throw ParseError(source_name, line_no,
                             "dimension mismatch: " + std::to_string(parts.size() - 1) + " components, expected " +
                                 std::to_string(table.dim_));
        }
        buffer.clear();
        for (std::size_t i = 1; i < parts.size(); ++i) {
            double v = 0.0;
            if (!parse_double(parts[i], v) || !std::isfinite(v)) {
                throw ParseError(source_name, line_no, "non-numeric component '" + std::string(parts[i]) + "'");
            }
            buffer.push_back(v);
        }
        table.add(std::string(parts[0]), buffer);
        ++rows;
    });
    if (!have_header) {
        throw ParseError(source_name, 0, "empty embedding file");
    }
    if (rows != declared) {
        throw ParseError(source_name, 0,
                         "header declares " + std::to_string(declared) + " vectors but file has " + std::to_string(rows));
    }
    return table;
}

EmbeddingTable load_embeddings(const std::filesystem::path& path) {
    return EmbeddingTable::parse(read_file(path), path.string());
}

}  // namespace simpqe
