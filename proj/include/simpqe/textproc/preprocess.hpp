#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simpqe/textproc/tagger.hpp"
#include "simpqe/textproc/wordlist.hpp"

namespace simpqe {

struct Token {
    std::string surface;
    std::string lower;
    std::string stem;
    CoarsePOS pos = CoarsePOS::Other;
    bool is_stopword = false;
    bool is_punct = false;

    /// Non-stopword, non-punctuation: the tokens the TF-IDF and frequency features use.
    bool is_content() const { return !is_stopword && !is_punct; }

    friend bool operator==(const Token&, const Token&) = default;
};

struct TokenizedSentence {
    std::vector<Token> tokens;
    std::string raw;

    friend bool operator==(const TokenizedSentence&, const TokenizedSentence&) = default;
};

/// Tokenize, lowercase, tag, stem and mark stopwords/punctuation.
class Preprocessor {
public:
    /// Heuristic tagger and the shipped stopword list.
    Preprocessor();
    /// Both references must outlive the preprocessor.
    Preprocessor(const Tagger& tagger, const WordList& stopwords);

    TokenizedSentence operator()(std::string_view text) const;

    const WordList& stopwords() const { return *stopwords_; }

private:
    const Tagger* tagger_;
    const WordList* stopwords_;
};

/// Same as Preprocessor(tagger, WordList::default_stopwords())(text).
TokenizedSentence preprocess(std::string_view text, const Tagger& tagger);

/// Number of tokens tagged NOUN, VERB, ADJ or ADV.
std::size_t open_class_count(const TokenizedSentence& s);

}  // namespace simpqe
