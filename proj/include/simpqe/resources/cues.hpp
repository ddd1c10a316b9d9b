#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "simpqe/textproc/preprocess.hpp"

namespace simpqe {

/// Lowercase cue phrases as token sequences.
class CuePhraseList {
public:
    CuePhraseList() = default;
    /// Throws Error on duplicate or empty phrases.
    explicit CuePhraseList(std::vector<std::vector<std::string>> phrases);

    /// One phrase per line, tokens separated by spaces.
    static CuePhraseList parse(std::string_view text, const std::string& source_name);
    static CuePhraseList load(const std::filesystem::path& path);
    /// The 100-phrase list compiled in from data/cue_phrases.txt.
    static const CuePhraseList& shipped();

    const std::vector<std::vector<std::string>>& phrases() const { return phrases_; }
    std::size_t size() const { return phrases_.size(); }

private:
    std::vector<std::vector<std::string>> phrases_;
};

/// Greedy left-to-right matching on lowercased tokens: at each position the longest phrase
/// that matches is counted and skipped over; otherwise advance by one token.
std::size_t count_cue_phrases(const TokenizedSentence& s, const CuePhraseList& cues);

}  // namespace simpqe
