#include "simpqe/textproc/porter.hpp"

namespace simpqe {

namespace {

// Working state over b[0..k]; j marks the end of the stem left by the last ends() match.
class PorterStemmer {
public:
    explicit PorterStemmer(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

    std::string run() {
        if (k_ <= 1) {
            return b_;
        }
        step1ab();
        if (k_ > 0) {
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        b_.resize(static_cast<std::size_t>(k_ + 1));
        return b_;
    }

private:
    char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

    bool cons(int i) const {
        switch (at(i)) {
            case 'a':
            case 'e':
            case 'i':
            case 'o':
            case 'u': return false;
            case 'y': return i == 0 ? true : !cons(i - 1);
            default: return true;
        }
    }

    // Number of VC sequences in b[0..j].
    int measure() const {
        int n = 0;
        int i = 0;
        for (;;) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        for (;;) {
            for (;;) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            for (;;) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i) {
            if (!cons(i)) return true;
        }
        return false;
    }

    bool double_consonant(int i) const { return i >= 1 && at(i) == at(i - 1) && cons(i); }

    // consonant-vowel-consonant ending at i, where the final consonant is not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char ch = at(i);
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view suffix) {
        const int len = static_cast<int>(suffix.size());
        if (len > k_ + 1 || suffix.back() != at(k_)) return false;
        if (std::string_view(b_).substr(static_cast<std::size_t>(k_ + 1 - len), suffix.size()) != suffix) return false;
        j_ = k_ - len;
        return true;
    }

    void set_to(std::string_view s) {
        b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
        k_ = j_ + static_cast<int>(s.size());
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    void replace_if_measured(std::string_view s) {
        if (measure() > 0) set_to(s);
    }

    // Plurals and -ed / -ing.
    void step1ab() {
        if (at(k_) == 's') {
            if (ends("sses")) {
                k_ -= 2;
            } else if (ends("ies")) {
                set_to("i");
            } else if (at(k_ - 1) != 's') {
                --k_;
            }
        }
        if (ends("eed")) {
            if (measure() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_consonant(k_)) {
                --k_;
                const char ch = at(k_);
                if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
            } else if (measure() == 1 && cvc(k_)) {
                set_to("e");
            }
        }
    }

    // Terminal y -> i when there is another vowel in the stem.
    void step1c() {
        if (ends("y") && vowel_in_stem()) {
            b_[static_cast<std::size_t>(k_)] = 'i';
        }
    }

    struct Rule {
        std::string_view suffix;
        std::string_view replacement;
    };

    // First matching suffix wins, whether or not the measure condition then holds.
    template <std::size_t N>
    bool apply_first(const Rule (&rules)[N]) {
        for (const auto& rule : rules) {
            if (ends(rule.suffix)) {
                replace_if_measured(rule.replacement);
                return true;
            }
        }
        return false;
    }

    // Double suffixes to single ones.
    void step2() {
        if (k_ < 1) return;
        switch (at(k_ - 1)) {
            case 'a': {
                static constexpr Rule r[] = {{"ational", "ate"}, {"tional", "tion"}};
                apply_first(r);
                break;
            }
            case 'c': {
                static constexpr Rule r[] = {{"enci", "ence"}, {"anci", "ance"}};
                apply_first(r);
                break;
            }
            case 'e': {
                static constexpr Rule r[] = {{"izer", "ize"}};
                apply_first(r);
                break;
            }
            case 'l': {
                static constexpr Rule r[] = {
                    {"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"}, {"ousli", "ous"}};
                apply_first(r);
                break;
            }
            case 'o': {
                static constexpr Rule r[] = {{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
                apply_first(r);
                break;
            }
            case 's': {
                static constexpr Rule r[] = {
                    {"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"}};
                apply_first(r);
                break;
            }
            case 't': {
                static constexpr Rule r[] = {{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
                apply_first(r);
                break;
            }
            case 'g': {
                static constexpr Rule r[] = {{"logi", "log"}};
                apply_first(r);
                break;
            }
            default: break;
        }
    }

    // -ic-, -full, -ness etc.
    void step3() {
        switch (at(k_)) {
            case 'e': {
                static constexpr Rule r[] = {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
                apply_first(r);
                break;
            }
            case 'i': {
                static constexpr Rule r[] = {{"iciti", "ic"}};
                apply_first(r);
                break;
            }
            case 'l': {
                static constexpr Rule r[] = {{"ical", "ic"}, {"ful", ""}};
                apply_first(r);
                break;
            }
            case 's': {
                static constexpr Rule r[] = {{"ness", ""}};
                apply_first(r);
                break;
            }
            default: break;
        }
    }

    // Strip -ant, -ence etc. in context <c>vcvc<v>.
    void step4() {
        if (k_ < 1) return;
        bool matched = false;
        switch (at(k_ - 1)) {
            case 'a': matched = ends("al"); break;
            case 'c': matched = ends("ance") || ends("ence"); break;
            case 'e': matched = ends("er"); break;
            case 'i': matched = ends("ic"); break;
            case 'l': matched = ends("able") || ends("ible"); break;
            case 'n': matched = ends("ant") || ends("ement") || ends("ment") || ends("ent"); break;
            case 'o':
                matched = (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) || ends("ou");
                break;
            case 's': matched = ends("ism"); break;
            case 't': matched = ends("ate") || ends("iti"); break;
            case 'u': matched = ends("ous"); break;
            case 'v': matched = ends("ive"); break;
            case 'z': matched = ends("ize"); break;
            default: break;
        }
        if (matched && measure() > 1) {
            k_ = j_;
        }
    }

    // Final -e and -ll.
    void step5() {
        j_ = k_;
        if (at(k_) == 'e') {
            const int a = measure();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (at(k_) == 'l' && double_consonant(k_) && measure() > 1) --k_;
    }

    std::string b_;
    int k_;
    int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
    return PorterStemmer(word).run();
}

}  // namespace simpqe
