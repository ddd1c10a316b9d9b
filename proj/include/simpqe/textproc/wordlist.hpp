#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace simpqe {

/// Set of lowercase words read from a one-word-per-line file; `#` starts a comment.
class WordList {
public:
    WordList() = default;

    static WordList parse(std::string_view text);
    static WordList load(const std::filesystem::path& path);

    /// Lists compiled into the library from data/stopwords.txt and data/closed_class.txt.
    static const WordList& default_stopwords();
    static const WordList& default_closed_class();

    /// Case-insensitive membership.
    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    std::unordered_set<std::string, Hash, std::equal_to<>> words_;
};

}  // namespace simpqe
