#include "simpqe/resources/cues.hpp"

#include <algorithm>
#include <set>

#include "simpqe/textproc/shipped_data.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

CuePhraseList::CuePhraseList(std::vector<std::vector<std::string>> phrases) : phrases_(std::move(phrases)) {
    std::set<std::vector<std::string>> seen;
    for (const auto& p : phrases_) {
        if (p.empty()) {
            throw Error("empty cue phrase");
        }
        if (!seen.insert(p).second) {
            std::string joined;
            for (const auto& t : p) joined += (joined.empty() ? "" : " ") + t;
            throw Error("duplicate cue phrase '" + joined + "'");
        }
    }
    // Longest first so the matcher can stop at the first hit.
    std::stable_sort(phrases_.begin(), phrases_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

CuePhraseList CuePhraseList::parse(std::string_view text, const std::string& source_name) {
    std::vector<std::vector<std::string>> phrases;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            return;
        }
        std::vector<std::string> tokens;
        for (auto w : split(line, ' ')) {
            if (!w.empty()) tokens.push_back(to_lower_ascii(w));
        }
        if (std::find(phrases.begin(), phrases.end(), tokens) != phrases.end()) {
            throw ParseError(source_name, line_no, "duplicate cue phrase '" + std::string(line) + "'");
        }
        phrases.push_back(std::move(tokens));
    });
    return CuePhraseList(std::move(phrases));
}

CuePhraseList CuePhraseList::load(const std::filesystem::path& path) {
    return parse(read_file(path), path.string());
}

const CuePhraseList& CuePhraseList::shipped() {
    static const CuePhraseList list = parse(shipped::cue_phrases(), "data/cue_phrases.txt");
    return list;
}

std::size_t count_cue_phrases(const TokenizedSentence& s, const CuePhraseList& cues) {
    const auto& tokens = s.tokens;
    std::size_t matches = 0;
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t advance = 1;
        for (const auto& phrase : cues.phrases()) {
            if (i + phrase.size() > tokens.size()) {
                continue;
            }
            bool hit = true;
            for (std::size_t j = 0; j < phrase.size() && hit; ++j) {
                hit = tokens[i + j].lower == phrase[j];
            }
            if (hit) {
                ++matches;
                advance = phrase.size();
                break;
            }
        }
        i += advance;
    }
    return matches;
}

}  // namespace simpqe
