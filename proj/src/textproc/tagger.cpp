#include "simpqe/textproc/tagger.hpp"

#include "simpqe/textproc/tokenize.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

namespace {

bool has_suffix(std::string_view word, std::string_view suffix) {
    return word.size() >= suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

std::string sentence_key(std::span<const std::string> tokens) {
    std::string key;
    for (const auto& t : tokens) {
        key += t;
    }
    return key;
}

}  // namespace

std::string_view to_string(CoarsePOS pos) {
    switch (pos) {
        case CoarsePOS::Noun: return "NOUN";
        case CoarsePOS::Verb: return "VERB";
        case CoarsePOS::Adj: return "ADJ";
        case CoarsePOS::Adv: return "ADV";
        case CoarsePOS::Other: return "OTHER";
    }
    return "?";
}

CoarsePOS parse_pos(std::string_view code) {
    for (CoarsePOS p : {CoarsePOS::Noun, CoarsePOS::Verb, CoarsePOS::Adj, CoarsePOS::Adv, CoarsePOS::Other}) {
        if (code == to_string(p)) {
            return p;
        }
    }
    throw Error("unknown POS code '" + std::string(code) + "'");
}

HeuristicTagger::HeuristicTagger() : closed_class_(WordList::default_closed_class()) {}

HeuristicTagger::HeuristicTagger(WordList closed_class) : closed_class_(std::move(closed_class)) {}

CoarsePOS HeuristicTagger::tag_word(std::string_view token) const {
    if (is_punct_token(token)) {
        return CoarsePOS::Other;
    }
    const std::string word = to_lower_ascii(token);
    if (closed_class_.contains(word)) {
        return CoarsePOS::Other;
    }
    if (has_suffix(word, "ly")) {
        return CoarsePOS::Adv;
    }
    if (word.size() >= 5) {
        for (std::string_view s : {"ing", "ed", "ize", "ate"}) {
            if (has_suffix(word, s)) {
                return CoarsePOS::Verb;
            }
        }
    }
    for (std::string_view s : {"ous", "ful", "ive", "able", "al"}) {
        if (has_suffix(word, s)) {
            return CoarsePOS::Adj;
        }
    }
    return CoarsePOS::Noun;
}

std::vector<CoarsePOS> HeuristicTagger::tag(std::span<const std::string> tokens) const {
    std::vector<CoarsePOS> tags;
    tags.reserve(tokens.size());
    for (const auto& t : tokens) {
        tags.push_back(tag_word(t));
    }
    return tags;
}

std::vector<TaggedSentence> parse_pretagged(std::string_view text, const std::string& source_name) {
    std::vector<TaggedSentence> sentences;
    TaggedSentence current;
    auto flush = [&] {
        if (!current.tokens.empty()) {
            sentences.push_back(std::move(current));
            current = {};
        }
    };
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (trim(line).empty()) {
            flush();
            return;
        }
        const auto cells = split(line, '\t');
        if (cells.size() != 2 || cells[0].empty()) {
            throw ParseError(source_name, line_no, "expected token<TAB>TAG");
        }
        try {
            current.tags.push_back(parse_pos(trim(cells[1])));
        } catch (const Error& e) {
            throw ParseError(source_name, line_no, e.what());
        }
        current.tokens.emplace_back(cells[0]);
    });
    flush();
    return sentences;
}

std::vector<TaggedSentence> load_pretagged(const std::filesystem::path& path) {
    return parse_pretagged(read_file(path), path.string());
}

PretaggedTagger::PretaggedTagger(std::vector<TaggedSentence> sentences) {
    for (auto& s : sentences) {
        by_text_.try_emplace(sentence_key(s.tokens), std::move(s.tags));
    }
}

std::vector<CoarsePOS> PretaggedTagger::tag(std::span<const std::string> tokens) const {
    if (tokens.empty()) {
        return {};
    }
    const auto it = by_text_.find(sentence_key(tokens));
    if (it == by_text_.end()) {
        std::string preview;
        for (const auto& t : tokens) {
            preview += (preview.empty() ? "" : " ") + t;
        }
        throw Error("sentence not found in pre-tagged input: " + preview);
    }
    return it->second;
}

std::vector<CoarsePOS> pos_tag(std::span<const std::string> tokens, const Tagger& tagger) {
    auto tags = tagger.tag(tokens);
    if (tags.size() != tokens.size()) {
        throw Error("tag count mismatch: " + std::to_string(tags.size()) + " tags for " +
                    std::to_string(tokens.size()) + " tokens");
    }
    return tags;
}

}  // namespace simpqe
