#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "simpqe/textproc/tagger.hpp"

namespace simpqe {

/// (word, POS) -> synonyms. A word is never stored as its own synonym.
class SynonymLexicon {
public:
    void add(const std::string& word, CoarsePOS pos, const std::string& synonym);

    /// Empty set when there is no entry for exactly this (word, POS).
    const std::set<std::string>& lookup(const std::string& word, CoarsePOS pos) const;
    std::size_t size() const { return entries_.size(); }

    /// `word<TAB>POS<TAB>syn1,syn2,...` with POS one of NOUN, VERB, ADJ, ADV.
    static SynonymLexicon parse(std::string_view text, const std::string& source_name);

private:
    std::map<std::pair<std::string, CoarsePOS>, std::set<std::string>> entries_;
};

SynonymLexicon load_synonyms(const std::filesystem::path& path);

}  // namespace simpqe
