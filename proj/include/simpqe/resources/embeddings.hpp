#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace simpqe {

/// Word vectors in one contiguous buffer.
class EmbeddingTable {
public:
    explicit EmbeddingTable(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return index_.size(); }

    /// Returns false (and ignores the vector) if the word is already present.
    /// Throws Error when the vector has the wrong length or a non-finite entry.
    bool add(std::string word, std::span<const double> vector);

    /// Empty optional for out-of-vocabulary words.
    std::optional<std::span<const double>> find(std::string_view word) const;

    /// Text format: a `<count> <dim>` line, then `word v1 ... vdim` per line.
    static EmbeddingTable parse(std::string_view text, const std::string& source_name);

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };

    std::size_t dim_;
    std::vector<double> data_;
    std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
};

EmbeddingTable load_embeddings(const std::filesystem::path& path);

}  // namespace simpqe
