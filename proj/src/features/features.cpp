#include "simpqe/features/features.hpp"

#include <cmath>

#include "simpqe/util/error.hpp"
#include "simpqe/util/parallel.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

constexpr std::array<std::string_view, 10> kAllNames{
    "loglik_per_token",       "perplexity",            "embedding_similarity", "synonym_cosine",
    "tfidf_cosine",           "length_diff",           "avg_word_len_diff",    "regular_wiki_freq_diff",
    "simple_wiki_freq_diff",  "cue_diff"};

std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (char c : s) {
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    }
    return n;
}

double mean_word_length(const TokenizedSentence& s) {
    std::size_t chars = 0;
    std::size_t words = 0;
    for (const auto& t : s.tokens) {
        if (!t.is_punct) {
            chars += utf8_length(t.surface);
            ++words;
        }
    }
    return words == 0 ? 0.0 : static_cast<double>(chars) / static_cast<double>(words);
}

std::vector<std::span<const double>> vectors_of(const TokenizedSentence& s, const EmbeddingTable& emb) {
    std::vector<std::span<const double>> out;
    for (const auto& t : s.tokens) {
        if (t.is_punct) continue;
        auto v = emb.find(t.surface);
        if (!v && t.lower != t.surface) v = emb.find(t.lower);
        if (v) out.push_back(*v);
    }
    return out;
}

}  // namespace

AnalyzedPair analyze(const SentencePair& pair, const Preprocessor& pre) {
    return AnalyzedPair{pair.id, pre(pair.original), pre(pair.simplified)};
}

std::vector<AnalyzedPair> analyze(std::span<const SentencePair> pairs, const Preprocessor& pre, std::size_t jobs) {
    std::vector<AnalyzedPair> out(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) { out[i] = analyze(pairs[i], pre); });
    return out;
}

GrammaticalityScores feat_grammaticality(const AnalyzedPair& pair, const NGramModel& lm) {
    std::vector<std::string> tokens;
    tokens.reserve(pair.simplified.tokens.size());
    for (const auto& t : pair.simplified.tokens) {
        tokens.push_back(t.lower);
    }
    if (tokens.empty()) {
        throw Error("pair '" + pair.id + "': simplified sentence has no tokens");
    }
    const auto scores = lm.position_scores(tokens);
    double total = 0.0;
    for (double s : scores) total += s;
    const double per_token = total / static_cast<double>(scores.size());
    return {per_token, std::pow(10.0, -per_token)};
}

double feat_embedding_similarity(const AnalyzedPair& pair, const EmbeddingTable& emb) {
    const auto o = vectors_of(pair.original, emb);
    const auto s = vectors_of(pair.simplified, emb);
    if (o.empty() || s.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto& a : o) {
        for (const auto& b : s) {
            sum += cosine(a, b);
        }
    }
    return sum / (static_cast<double>(o.size()) * static_cast<double>(s.size()));
}

SparseVector synonym_expanded_vector(const TokenizedSentence& s, const SynonymLexicon& syn) {
    SparseVector v;
    for (const auto& t : s.tokens) {
        if (t.is_punct) continue;
        v[t.lower] += 1.0;
        if (is_open_class(t.pos)) {
            for (const auto& other : syn.lookup(t.lower, t.pos)) {
                v[other] += 1.0;
            }
        }
    }
    return v;
}

double feat_synonym_cosine(const AnalyzedPair& pair, const SynonymLexicon& syn) {
    return cosine(synonym_expanded_vector(pair.original, syn), synonym_expanded_vector(pair.simplified, syn));
}

SparseVector tfidf_vector(const TokenizedSentence& s, const IdfTable& idf) {
    SparseVector tf;
    for (const auto& t : s.tokens) {
        if (t.is_content()) tf[t.stem] += 1.0;
    }
    for (auto& [stem, w] : tf) {
        w *= idf.idf(stem);
    }
    return tf;
}

double feat_tfidf_cosine(const AnalyzedPair& pair, const IdfTable& idf) {
    return cosine(tfidf_vector(pair.original, idf), tfidf_vector(pair.simplified, idf));
}

std::int64_t feat_length_diff(const AnalyzedPair& pair) {
    return static_cast<std::int64_t>(open_class_count(pair.original)) -
           static_cast<std::int64_t>(open_class_count(pair.simplified));
}

double feat_avg_word_len_diff(const AnalyzedPair& pair) {
    return mean_word_length(pair.original) - mean_word_length(pair.simplified);
}

double feat_regular_wiki_freq_diff(const AnalyzedPair& pair, const FrequencyTable& table) {
    return avg_stem_frequency(pair.original, table) - avg_stem_frequency(pair.simplified, table);
}

double feat_simple_wiki_freq_diff(const AnalyzedPair& pair, const FrequencyTable& table) {
    return avg_stem_frequency(pair.original, table) - avg_stem_frequency(pair.simplified, table);
}

std::int64_t feat_cue_diff(const AnalyzedPair& pair, const CuePhraseList& cues) {
    return static_cast<std::int64_t>(count_cue_phrases(pair.original, cues)) -
           static_cast<std::int64_t>(count_cue_phrases(pair.simplified, cues));
}

std::span<const std::string_view> all_feature_names() {
    return kAllNames;
}

std::span<const std::string_view> feature_names(Aspect aspect) {
    const std::span<const std::string_view> all(kAllNames);
    switch (aspect) {
        case Aspect::Grammaticality: return all.subspan(0, 2);
        case Aspect::Meaning: return all.subspan(2, 2);
        case Aspect::Simplicity: return all.subspan(4, 6);
        case Aspect::Overall: return {};
    }
    return {};
}

const FeatureVector& PairFeatures::for_aspect(Aspect aspect) const {
    switch (aspect) {
        case Aspect::Grammaticality: return grammaticality;
        case Aspect::Meaning: return meaning;
        case Aspect::Simplicity: return simplicity;
        case Aspect::Overall: break;
    }
    throw Error("the overall aspect has no feature vector; it is derived from meaning and simplicity");
}

FeatureVector& PairFeatures::for_aspect(Aspect aspect) {
    return const_cast<FeatureVector&>(static_cast<const PairFeatures&>(*this).for_aspect(aspect));
}

std::vector<double> PairFeatures::flat() const {
    std::vector<double> out;
    out.reserve(kAllNames.size());
    for (const auto* v : {&grammaticality, &meaning, &simplicity}) {
        out.insert(out.end(), v->values.begin(), v->values.end());
    }
    return out;
}

PairFeatures assemble_features(const AnalyzedPair& pair, const ResourceBundle& res, const IdfTable& idf) {
    PairFeatures f;
    f.pair_id = pair.id;
    const auto g = feat_grammaticality(pair, res.lm);
    f.grammaticality.values = {g.loglik_per_token, g.perplexity};
    f.meaning.values = {feat_embedding_similarity(pair, res.embeddings), feat_synonym_cosine(pair, res.synonyms)};
    f.simplicity.values = {feat_tfidf_cosine(pair, idf),
                           static_cast<double>(feat_length_diff(pair)),
                           feat_avg_word_len_diff(pair),
                           feat_regular_wiki_freq_diff(pair, res.regular_freq),
                           feat_simple_wiki_freq_diff(pair, res.simple_freq),
                           static_cast<double>(feat_cue_diff(pair, res.cues))};
    return f;
}

std::vector<PairFeatures> extract_features(std::span<const AnalyzedPair> pairs, const ResourceBundle& res,
                                           const IdfTable& idf, std::size_t jobs) {
    std::vector<PairFeatures> out(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) { out[i] = assemble_features(pairs[i], res, idf); });
    return out;
}

void write_feature_dump(std::ostream& out, std::span<const PairFeatures> rows) {
    out << "pair_id";
    for (auto name : kAllNames) {
        out << '\t' << name;
    }
    out << '\n';
    for (const auto& row : rows) {
        out << row.pair_id;
        for (double v : row.flat()) {
            out << '\t' << format_sig(v, 10);
        }
        out << '\n';
    }
}

}  // namespace simpqe
