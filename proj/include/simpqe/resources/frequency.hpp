#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "simpqe/textproc/preprocess.hpp"

namespace simpqe {

/// Stem counts over the non-stopword, non-punctuation tokens of a corpus.
class FrequencyTable {
public:
    explicit FrequencyTable(std::string name = {});

    const std::string& name() const { return name_; }
    std::uint64_t total() const { return total_; }
    std::size_t distinct() const { return counts_.size(); }
    std::uint64_t count(std::string_view stem) const;

    void add(std::string_view stem, std::uint64_t n = 1);
    /// Adds the content-token stems of one preprocessed sentence.
    void add_sentence(const TokenizedSentence& s);

    /// Header `simpqe-freq v1 total=<T> name=<s>`, then `stem<TAB>count` lines sorted by stem.
    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    static FrequencyTable parse(std::string_view text, const std::string& source_name);
    static FrequencyTable load(const std::filesystem::path& path);

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };

    std::string name_;
    std::uint64_t total_ = 0;
    std::unordered_map<std::string, std::uint64_t, Hash, std::equal_to<>> counts_;
};

/// Reads `corpus` line by line, preprocesses each line and counts content stems.
/// The name must not contain whitespace.
FrequencyTable build_frequency_table(std::istream& corpus, const std::string& name, const Preprocessor& pre);

/// Mean table count over the content tokens of `s` (absent stems count 0); 0 when there are none.
double avg_stem_frequency(const TokenizedSentence& s, const FrequencyTable& table);

}  // namespace simpqe
