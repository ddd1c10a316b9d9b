#include "simpqe/resources/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

void join_into(std::string& out, std::span<const std::string> context, const std::string* last) {
    out.clear();
    for (const auto& t : context) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    if (last != nullptr) {
        if (!out.empty()) out += ' ';
        out += *last;
    }
}

constexpr std::string_view kMagic = "simpqe-ngram";
constexpr std::string_view kVersion = "v1";

}  // namespace

NGramModel::NGramModel(std::size_t order, double alpha) : order_(order), alpha_(alpha), levels_(order) {
    if (order == 0) {
        throw Error("n-gram order must be at least 1");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw Error("backoff alpha must lie in (0, 1]");
    }
}

std::uint64_t NGramModel::count(std::string_view space_joined, std::size_t n) const {
    if (n == 0 || n > order_) {
        return 0;
    }
    const auto& table = levels_[n - 1];
    const auto it = table.find(space_joined);
    return it == table.end() ? 0 : it->second;
}

std::uint64_t NGramModel::count(std::span<const std::string> gram) const {
    std::string key;
    join_into(key, gram, nullptr);
    return count(key, gram.size());
}

double NGramModel::score_joined(std::span<const std::string> context, const std::string& word,
                                std::string& scratch) const {
    if (context.size() + 1 > order_) {
        context = context.subspan(context.size() + 1 - order_);
    }
    double penalty = 1.0;
    for (std::size_t len = context.size(); len >= 1; --len) {
        const auto ctx = context.subspan(context.size() - len);
        join_into(scratch, ctx, &word);
        const std::uint64_t joint = count(scratch, len + 1);
        if (joint > 0) {
            join_into(scratch, ctx, nullptr);
            const std::uint64_t marginal = count(scratch, len);
            return penalty * static_cast<double>(joint) / static_cast<double>(marginal);
        }
        penalty *= alpha_;
    }
    const std::uint64_t unigram = count(word, 1);
    if (unigram > 0) {
        return penalty * static_cast<double>(unigram) / static_cast<double>(total_unigrams_);
    }
    return penalty / static_cast<double>(total_unigrams_ + vocab_size() + 1);
}

double NGramModel::score(std::span<const std::string> context, const std::string& word) const {
    std::string scratch;
    return score_joined(context, word, scratch);
}

std::vector<double> NGramModel::position_scores(std::span<const std::string> tokens, BoundaryMode mode) const {
    std::vector<std::string> padded;
    std::size_t first = 0;
    if (mode.sentence_boundaries) {
        padded.assign(order_ - 1, std::string(kSentenceStart));
        first = order_ - 1;
        padded.insert(padded.end(), tokens.begin(), tokens.end());
        padded.emplace_back(kSentenceEnd);
    } else {
        padded.assign(tokens.begin(), tokens.end());
    }
    const std::span<const std::string> seq(padded);
    std::vector<double> scores;
    scores.reserve(seq.size() - first);
    std::string scratch;
    for (std::size_t i = first; i < seq.size(); ++i) {
        const std::size_t ctx_len = std::min(i, order_ - 1);
        scores.push_back(std::log10(score_joined(seq.subspan(i - ctx_len, ctx_len), seq[i], scratch)));
    }
    return scores;
}

double NGramModel::sentence_loglik(std::span<const std::string> tokens, BoundaryMode mode) const {
    double total = 0.0;
    for (double s : position_scores(tokens, mode)) {
        total += s;
    }
    return total;
}

double NGramModel::perplexity(std::span<const std::string> tokens, BoundaryMode mode) const {
    if (tokens.empty()) {
        throw Error("perplexity of an empty token list is undefined");
    }
    const auto scores = position_scores(tokens, mode);
    double total = 0.0;
    for (double s : scores) {
        total += s;
    }
    return std::pow(10.0, -total / static_cast<double>(scores.size()));
}

void NGramModel::save(std::ostream& out) const {
    out << kMagic << ' ' << kVersion << " order=" << order_ << " alpha=" << format_exact(alpha_)
        << " N=" << total_unigrams_ << " V=" << vocab_size() << '\n';
    for (std::size_t level = 0; level < order_; ++level) {
        std::vector<const Table::value_type*> entries;
        entries.reserve(levels_[level].size());
        for (const auto& e : levels_[level]) {
            entries.push_back(&e);
        }
        std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) { return a->first < b->first; });
        for (const auto* e : entries) {
            out << (level + 1) << '\t' << e->first << '\t' << e->second << '\n';
        }
    }
}

void NGramModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write n-gram model: " + path.string());
    }
    save(out);
    if (!out) {
        throw Error("failed writing n-gram model: " + path.string());
    }
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
    return parse(read_file(path), path.string());
}

NGramModel NGramModel::parse(std::string_view text, const std::string& source_name) {
    std::size_t order = 0;
    double alpha = 0.0;
    std::uint64_t declared_n = 0;
    std::uint64_t declared_v = 0;
    std::unique_ptr<NGramModel> model;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (line_no == 1) {
            const auto words = split(line, ' ');
            if (words.size() < 2 || words[0] != kMagic) {
                throw ParseError(source_name, line_no, "not a simpqe n-gram model file");
            }
            if (words[1] != kVersion) {
                throw ParseError(source_name, line_no, "unsupported n-gram model version '" + std::string(words[1]) + "'");
            }
            std::vector<std::pair<std::string, std::string>> fields;
            if (!parse_header_fields(line, 2, fields)) {
                throw ParseError(source_name, line_no, "malformed header");
            }
            bool have[4] = {};
            for (const auto& [key, value] : fields) {
                std::uint64_t u = 0;
                if (key == "order" && parse_uint(value, u)) {
                    order = u;
                    have[0] = true;
                } else if (key == "alpha" && parse_double(value, alpha)) {
                    have[1] = true;
                } else if (key == "N" && parse_uint(value, declared_n)) {
                    have[2] = true;
                } else if (key == "V" && parse_uint(value, declared_v)) {
                    have[3] = true;
                } else {
                    throw ParseError(source_name, line_no, "bad header field '" + key + "=" + value + "'");
                }
            }
            if (!(have[0] && have[1] && have[2] && have[3])) {
                throw ParseError(source_name, line_no, "header must declare order, alpha, N and V");
            }
            try {
                model = std::make_unique<NGramModel>(order, alpha);
            } catch (const Error& e) {
                throw ParseError(source_name, line_no, e.what());
            }
            return;
        }
        if (line.empty()) {
            return;
        }
        const auto cells = split(line, '\t');
        std::uint64_t level = 0;
        std::uint64_t count = 0;
        if (cells.size() != 3 || !parse_uint(cells[0], level) || !parse_uint(cells[2], count)) {
            throw ParseError(source_name, line_no, "expected level<TAB>gram<TAB>count");
        }
        if (level == 0 || level > order) {
            throw ParseError(source_name, line_no, "n-gram level " + std::to_string(level) + " outside 1.." +
                                                       std::to_string(order));
        }
        if (count == 0) {
            throw ParseError(source_name, line_no, "n-gram count must be positive");
        }
        const auto words = split(cells[1], ' ');
        if (words.size() != level || std::any_of(words.begin(), words.end(), [](auto w) { return w.empty(); })) {
            throw ParseError(source_name, line_no, "gram does not have " + std::to_string(level) + " tokens");
        }
        if (!model->levels_[level - 1].emplace(std::string(cells[1]), count).second) {
            throw ParseError(source_name, line_no, "duplicate n-gram '" + std::string(cells[1]) + "'");
        }
        if (level == 1) {
            model->total_unigrams_ += count;
        }
    });

    if (!model) {
        throw ParseError(source_name, 0, "empty n-gram model file");
    }
    if (model->total_unigrams_ != declared_n || model->vocab_size() != declared_v) {
        throw ParseError(source_name, 0, "unigram table disagrees with header N/V (truncated file?)");
    }
    if (declared_n == 0) {
        throw ParseError(source_name, 0, "model has no unigrams");
    }
    for (std::size_t level = 1; level < model->order_; ++level) {
        for (const auto& [gram, c] : model->levels_[level]) {
            const auto prefix = std::string_view(gram).substr(0, gram.rfind(' '));
            if (model->count(prefix, level) < c) {
                throw ParseError(source_name, 0, "n-gram '" + gram + "' has a prefix with a smaller count");
            }
        }
    }
    return std::move(*model);
}

NGramCounter::NGramCounter(std::size_t order, double alpha, BoundaryMode mode) : model_(order, alpha), mode_(mode) {}

void NGramCounter::add_sentence(std::span<const std::string> tokens) {
    if (tokens.empty()) {
        return;
    }
    const std::size_t order = model_.order_;
    padded_.clear();
    if (mode_.sentence_boundaries) {
        padded_.assign(order - 1, std::string(kSentenceStart));
        padded_.insert(padded_.end(), tokens.begin(), tokens.end());
        padded_.emplace_back(kSentenceEnd);
    } else {
        padded_.assign(tokens.begin(), tokens.end());
    }
    ++sentences_;
    for (std::size_t i = 0; i < padded_.size(); ++i) {
        key_.clear();
        for (std::size_t n = 1; n <= order && i + n <= padded_.size(); ++n) {
            if (n > 1) key_ += ' ';
            key_ += padded_[i + n - 1];
            auto& table = model_.levels_[n - 1];
            if (auto it = table.find(std::string_view(key_)); it != table.end()) {
                ++it->second;
            } else {
                table.emplace(key_, 1);
            }
        }
    }
    model_.total_unigrams_ += padded_.size();
}

NGramModel NGramCounter::finish() && {
    if (model_.total_unigrams_ == 0) {
        throw Error("cannot train an n-gram model on an empty corpus");
    }
    return std::move(model_);
}

NGramModel train_ngram(std::span<const std::vector<std::string>> corpus, std::size_t order, double alpha,
                       BoundaryMode mode) {
    NGramCounter counter(order, alpha, mode);
    for (const auto& sentence : corpus) {
        counter.add_sentence(sentence);
    }
    return std::move(counter).finish();
}

}  // namespace simpqe
