#include "simpqe/textproc/preprocess.hpp"

#include <algorithm>

#include "simpqe/textproc/porter.hpp"
#include "simpqe/textproc/tokenize.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

const HeuristicTagger& default_tagger() {
    static const HeuristicTagger tagger;
    return tagger;
}

}  // namespace

Preprocessor::Preprocessor() : tagger_(&default_tagger()), stopwords_(&WordList::default_stopwords()) {}

Preprocessor::Preprocessor(const Tagger& tagger, const WordList& stopwords)
    : tagger_(&tagger), stopwords_(&stopwords) {}

TokenizedSentence Preprocessor::operator()(std::string_view text) const {
    TokenizedSentence sentence;
    sentence.raw = std::string(text);
    auto surfaces = tokenize(text);
    const auto tags = pos_tag(surfaces, *tagger_);
    sentence.tokens.reserve(surfaces.size());
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
        Token t;
        t.surface = std::move(surfaces[i]);
        t.lower = to_lower_ascii(t.surface);
        t.is_punct = is_punct_token(t.lower);
        t.stem = t.is_punct ? t.lower : porter_stem(t.lower);
        t.pos = t.is_punct ? CoarsePOS::Other : tags[i];
        t.is_stopword = stopwords_->contains(t.lower);
        sentence.tokens.push_back(std::move(t));
    }
    return sentence;
}

TokenizedSentence preprocess(std::string_view text, const Tagger& tagger) {
    return Preprocessor(tagger, WordList::default_stopwords())(text);
}

std::size_t open_class_count(const TokenizedSentence& s) {
    return static_cast<std::size_t>(
        std::count_if(s.tokens.begin(), s.tokens.end(), [](const Token& t) { return is_open_class(t.pos); }));
}

}  // namespace simpqe
