#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simpqe/corpus/dataset.hpp"
#include "simpqe/features/idf.hpp"
#include "simpqe/features/similarity.hpp"
#include "simpqe/resources/cues.hpp"
#include "simpqe/resources/embeddings.hpp"
#include "simpqe/resources/frequency.hpp"
#include "simpqe/resources/ngram.hpp"
#include "simpqe/resources/synonyms.hpp"
#include "simpqe/textproc/preprocess.hpp"

namespace simpqe {

/// A sentence pair after preprocessing both sides.
struct AnalyzedPair {
    std::string id;
    TokenizedSentence original;
    TokenizedSentence simplified;
};

AnalyzedPair analyze(const SentencePair& pair, const Preprocessor& pre);
std::vector<AnalyzedPair> analyze(std::span<const SentencePair> pairs, const Preprocessor& pre, std::size_t jobs = 1);

/// Everything feature extraction reads, apart from the dataset-derived IDF table.
struct ResourceBundle {
    NGramModel lm;
    EmbeddingTable embeddings;
    SynonymLexicon synonyms;
    FrequencyTable regular_freq;
    FrequencyTable simple_freq;
    CuePhraseList cues;
};

// Individual features. Each is a pure function of its arguments.

struct GrammaticalityScores {
    double loglik_per_token;
    double perplexity;
};

/// LM scores of the simplified side only (lowercased tokens, punctuation kept).
/// Throws Error if the simplified sentence has no tokens.
GrammaticalityScores feat_grammaticality(const AnalyzedPair& pair, const NGramModel& lm);

/// Mean pairwise cosine between the vectors of the original's and the simplified's
/// non-punctuation tokens (stopwords kept, words without vectors dropped); 0 if either side has none.
double feat_embedding_similarity(const AnalyzedPair& pair, const EmbeddingTable& emb);

/// Cosine of term-count vectors over lowercased non-punctuation words, each open-class word
/// also contributing its synonyms for the same POS.
double feat_synonym_cosine(const AnalyzedPair& pair, const SynonymLexicon& syn);
SparseVector synonym_expanded_vector(const TokenizedSentence& s, const SynonymLexicon& syn);

/// Cosine of tf*idf vectors over content stems.
double feat_tfidf_cosine(const AnalyzedPair& pair, const IdfTable& idf);
SparseVector tfidf_vector(const TokenizedSentence& s, const IdfTable& idf);

/// Open-class count of the original minus that of the simplified side.
std::int64_t feat_length_diff(const AnalyzedPair& pair);
/// Mean character length of non-punctuation tokens, original minus simplified.
double feat_avg_word_len_diff(const AnalyzedPair& pair);
/// avg_stem_frequency(original) - avg_stem_frequency(simplified).
double feat_regular_wiki_freq_diff(const AnalyzedPair& pair, const FrequencyTable& table);
double feat_simple_wiki_freq_diff(const AnalyzedPair& pair, const FrequencyTable& table);
std::int64_t feat_cue_diff(const AnalyzedPair& pair, const CuePhraseList& cues);

/// Fixed feature names for an aspect, in vector order. OVERALL has none.
std::span<const std::string_view> feature_names(Aspect aspect);
/// All ten names: grammaticality, then meaning, then simplicity.
std::span<const std::string_view> all_feature_names();

struct FeatureVector {
    Aspect aspect;
    std::vector<double> values;

    std::span<const std::string_view> names() const { return feature_names(aspect); }
};

struct PairFeatures {
    std::string pair_id;
    FeatureVector grammaticality{Aspect::Grammaticality, {}};
    FeatureVector meaning{Aspect::Meaning, {}};
    FeatureVector simplicity{Aspect::Simplicity, {}};

    /// Throws Error for OVERALL, which has no feature vector.
    const FeatureVector& for_aspect(Aspect aspect) const;
    FeatureVector& for_aspect(Aspect aspect);
    /// The ten values in all_feature_names() order.
    std::vector<double> flat() const;
};

PairFeatures assemble_features(const AnalyzedPair& pair, const ResourceBundle& res, const IdfTable& idf);
std::vector<PairFeatures> extract_features(std::span<const AnalyzedPair> pairs, const ResourceBundle& res,
                                           const IdfTable& idf, std::size_t jobs = 1);

/// Header `pair_id` plus the ten names; values printed with 10 significant digits.
void write_feature_dump(std::ostream& out, std::span<const PairFeatures> rows);

}  // namespace simpqe
