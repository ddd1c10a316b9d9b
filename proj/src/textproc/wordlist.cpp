#include "simpqe/textproc/wordlist.hpp"

#include "simpqe/textproc/shipped_data.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

WordList WordList::parse(std::string_view text) {
    WordList list;
    for_each_line(text, [&](std::size_t, std::string_view line) {
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            list.words_.insert(to_lower_ascii(line));
        }
    });
    return list;
}

WordList WordList::load(const std::filesystem::path& path) {
    return parse(read_file(path));
}

const WordList& WordList::default_stopwords() {
    static const WordList list = parse(shipped::stopwords());
    return list;
}

const WordList& WordList::default_closed_class() {
    static const WordList list = parse(shipped::closed_class());
    return list;
}

bool WordList::contains(std::string_view word) const {
    for (char c : word) {
        if (c >= 'A' && c <= 'Z') {
            return words_.find(to_lower_ascii(word)) != words_.end();
        }
    }
    return words_.find(word) != words_.end();
}

}  // namespace simpqe
