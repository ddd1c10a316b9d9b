#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "simpqe/textproc/preprocess.hpp"

namespace simpqe {

/// Document frequencies of content stems, each sentence being one document.
class IdfTable {
public:
    std::uint64_t documents() const { return documents_; }
    std::uint64_t document_frequency(std::string_view stem) const;
    /// ln((D + 1) / (df + 1)) + 1, so unseen stems get ln(D + 1) + 1.
    double idf(std::string_view stem) const;

    void add_document(const TokenizedSentence& s);

    /// Header `simpqe-idf v1 D=<D>`, then `stem<TAB>df` lines sorted by stem.
    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    static IdfTable parse(std::string_view text, const std::string& source_name);
    static IdfTable load(const std::filesystem::path& path);

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };

    std::uint64_t documents_ = 0;
    std::unordered_map<std::string, std::uint64_t, Hash, std::equal_to<>> df_;
};

struct AnalyzedPair;

/// Every original and every simplified sentence is a document (D = 2 * pairs).
/// Throws Error when `pairs` is empty.
IdfTable build_idf(std::span<const AnalyzedPair> pairs);

}  // namespace simpqe
