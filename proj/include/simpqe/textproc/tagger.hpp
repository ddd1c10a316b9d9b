#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simpqe/textproc/wordlist.hpp"

namespace simpqe {

/// NOUN, VERB, ADJ and ADV are the open classes.
enum class CoarsePOS { Noun, Verb, Adj, Adv, Other };

constexpr bool is_open_class(CoarsePOS pos) { return pos != CoarsePOS::Other; }

/// Upper-case codes NOUN, VERB, ADJ, ADV, OTHER. parse_pos throws Error on anything else.
std::string_view to_string(CoarsePOS pos);
CoarsePOS parse_pos(std::string_view code);

class Tagger {
public:
    virtual ~Tagger() = default;
    virtual std::vector<CoarsePOS> tag(std::span<const std::string> tokens) const = 0;
};

/// Rule-based default: punctuation and closed-class words are OTHER; then suffix rules
/// (-ly ADV; -ing/-ed/-ize/-ate VERB when the word has at least 5 characters;
/// -ous/-ful/-ive/-able/-al ADJ); everything else is NOUN.
class HeuristicTagger final : public Tagger {
public:
    HeuristicTagger();
    explicit HeuristicTagger(WordList closed_class);

    std::vector<CoarsePOS> tag(std::span<const std::string> tokens) const override;
    CoarsePOS tag_word(std::string_view token) const;

private:
    WordList closed_class_;
};

struct TaggedSentence {
    std::vector<std::string> tokens;
    std::vector<CoarsePOS> tags;
};

/// Vertical `token<TAB>TAG` lines with a blank line between sentences.
std::vector<TaggedSentence> parse_pretagged(std::string_view text, const std::string& source_name);
std::vector<TaggedSentence> load_pretagged(const std::filesystem::path& path);

/// Serves tags from externally tagged sentences. A sentence is located by the concatenation of
/// its token surfaces with whitespace removed, so a tokenization that differs from ours still
/// finds its entry and is then rejected by pos_tag's count check.
class PretaggedTagger final : public Tagger {
public:
    explicit PretaggedTagger(std::vector<TaggedSentence> sentences);

    std::vector<CoarsePOS> tag(std::span<const std::string> tokens) const override;

private:
    std::unordered_map<std::string, std::vector<CoarsePOS>> by_text_;
};

/// One tag per token; throws Error if the tagger returns a different number of tags.
std::vector<CoarsePOS> pos_tag(std::span<const std::string> tokens, const Tagger& tagger);

}  // namespace simpqe
