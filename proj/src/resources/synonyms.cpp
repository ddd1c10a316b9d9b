#include "simpqe/resources/synonyms.hpp"

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

void SynonymLexicon::add(const std::string& word, CoarsePOS pos, const std::string& synonym) {
    auto& set = entries_[{word, pos}];
    if (synonym != word) {
        set.insert(synonym);
    }
}

const std::set<std::string>& SynonymLexicon::lookup(const std::string& word, CoarsePOS pos) const {
    static const std::set<std::string> empty;
    const auto it = entries_.find({word, pos});
    return it == entries_.end() ? empty : it->second;
}

SynonymLexicon SynonymLexicon::parse(std::string_view text, const std::string& source_name) {
    SynonymLexicon lexicon;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (trim(line).empty() || trim(line).front() == '#') {
            return;
        }
        const auto cells = split(line, '\t');
        if (cells.size() != 3) {
            throw ParseError(source_name, line_no, "expected word<TAB>POS<TAB>synonyms");
        }
        const std::string word = to_lower_ascii(trim(cells[0]));
        if (word.empty()) {
            throw ParseError(source_name, line_no, "empty headword");
        }
        CoarsePOS pos{};
        const auto code = trim(cells[1]);
        if (code == "NOUN") {
            pos = CoarsePOS::Noun;
        } else if (code == "VERB") {
            pos = CoarsePOS::Verb;
        } else if (code == "ADJ") {
            pos = CoarsePOS::Adj;
        } else if (code == "ADV") {
            pos = CoarsePOS::Adv;
        } else {
            throw ParseError(source_name, line_no, "unknown POS code '" + std::string(code) + "'");
        }
        lexicon.entries_[{word, pos}];
        for (auto syn : split(cells[2], ',')) {
            syn = trim(syn);
            if (!syn.empty()) {
                lexicon.add(word, pos, to_lower_ascii(syn));
            }
        }
    });
    return lexicon;
}

SynonymLexicon load_synonyms(const std::filesystem::path& path) {
    return SynonymLexicon::parse(read_file(path), path.string());
}

}  // namespace simpqe
