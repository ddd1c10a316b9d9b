#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace simpqe {

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";

struct BoundaryMode {
    /// Pad with order-1 `<s>` markers and one `</s>`; when false, sentences are used as-is.
    bool sentence_boundaries = true;
};

/// Backoff n-gram model with stupid-backoff scoring:
///   S(w|c) = count(c w) / count(c)        if count(c w) > 0
///          = alpha * S(w | c minus its first word)   otherwise
///   S(w)   = count(w) / N, or 1 / (N + |V| + 1) for unseen words.
/// Scores are not a normalised distribution; perplexity is the usual transform of them.
class NGramModel {
public:
    static constexpr double kDefaultAlpha = 0.4;

    NGramModel(std::size_t order, double alpha);

    std::size_t order() const { return order_; }
    double alpha() const { return alpha_; }
    std::uint64_t total_unigrams() const { return total_unigrams_; }
    std::uint64_t vocab_size() const { return levels_[0].size(); }
    /// Number of distinct n-grams stored at level n (1-based).
    std::size_t distinct(std::size_t n) const { return levels_.at(n - 1).size(); }

    /// Count of the n-gram whose tokens are `gram` (0 if absent or longer than the order).
    std::uint64_t count(std::span<const std::string> gram) const;
    std::uint64_t count(std::string_view space_joined, std::size_t n) const;

    /// S(word | context); context is truncated to the last order-1 tokens.
    double score(std::span<const std::string> context, const std::string& word) const;

    /// log10 S of each scored position (the tokens, plus `</s>` in boundary mode).
    std::vector<double> position_scores(std::span<const std::string> tokens, BoundaryMode mode = {}) const;
    /// Sum of position_scores: log10 of the sentence score, always <= 0.
    double sentence_loglik(std::span<const std::string> tokens, BoundaryMode mode = {}) const;
    /// 10^(-loglik / T) over the T scored positions. Throws Error on an empty token list.
    double perplexity(std::span<const std::string> tokens, BoundaryMode mode = {}) const;

    /// Header `simpqe-ngram v1 order=<n> alpha=<a> N=<N> V=<V>`, then `level<TAB>gram<TAB>count`
    /// lines sorted by level and gram.
    void save(std::ostream& out) const;
    void save(const std::filesystem::path& path) const;
    static NGramModel load(const std::filesystem::path& path);
    static NGramModel parse(std::string_view text, const std::string& source_name);

private:
    friend class NGramCounter;

    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    using Table = std::unordered_map<std::string, std::uint64_t, Hash, std::equal_to<>>;

    double score_joined(std::span<const std::string> context, const std::string& word, std::string& scratch) const;

    std::size_t order_;
    double alpha_;
    std::uint64_t total_unigrams_ = 0;
    std::vector<Table> levels_;
};

/// Streaming builder: feed sentences, then take the model.
class NGramCounter {
public:
    explicit NGramCounter(std::size_t order, double alpha = NGramModel::kDefaultAlpha, BoundaryMode mode = {});

    void add_sentence(std::span<const std::string> tokens);
    std::size_t sentences() const { return sentences_; }
    /// Throws Error if no token was ever added.
    NGramModel finish() &&;

private:
    NGramModel model_;
    BoundaryMode mode_;
    std::size_t sentences_ = 0;
    std::vector<std::string> padded_;
    std::string key_;
};

/// Convenience wrapper over NGramCounter. Throws Error for order 0 or an empty corpus.
NGramModel train_ngram(std::span<const std::vector<std::string>> corpus, std::size_t order,
                       double alpha = NGramModel::kDefaultAlpha, BoundaryMode mode = {});

}  // namespace simpqe
