#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "simpqe/textproc/porter.hpp"
#include "simpqe/textproc/preprocess.hpp"
#include "simpqe/textproc/shipped_data.hpp"
#include "simpqe/textproc/tagger.hpp"
#include "simpqe/textproc/tokenize.hpp"
#include "simpqe/textproc/wordlist.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/rng.hpp"
#include "simpqe/util/text_io.hpp"

using namespace simpqe;
using Strings = std::vector<std::string>;

namespace {

std::vector<std::pair<std::string, std::string>> porter_pairs() {
    const std::string dir = SIMPQE_TEST_DATA_DIR;
    std::ifstream voc(dir + "/porter_voc.txt");
    std::ifstream out(dir + "/porter_output.txt");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string w, s;
    while (std::getline(voc, w) && std::getline(out, s)) {
        if (!w.empty()) {
            pairs.emplace_back(w, s);
        }
    }
    return pairs;
}

std::string random_text(Rng& rng) {
    static const std::vector<std::string> pieces{"a",  "Cat", " ",  "  ", "\t", ".",  ",", "'",  "\"", "(",
                                                 ")",  "x.y", "é",  "\xE2\x80\x83", "!?", "don't", "\n", "[",
                                                 "]",  "3.5", ";:"};
    std::string text;
    const auto n = rng.below(20);
    for (std::uint64_t i = 0; i < n; ++i) {
        text += pieces[rng.below(pieces.size())];
    }
    return text;
}

}  // namespace

TEST_CASE("tokenize examples") {
    CHECK(tokenize("The cat sat.") == Strings{"The", "cat", "sat", "."});
    CHECK(tokenize("").empty());
    CHECK(tokenize("don't stop, however") == Strings{"don't", "stop", ",", "however"});
}

TEST_CASE("tokenize edge punctuation and whitespace") {
    CHECK(tokenize("(\"Hi!\")") == Strings{"(", "\"", "Hi", "!", "\"", ")"});
    CHECK(tokenize("e.g. 3.5") == Strings{"e.g", ".", "3.5"});
    CHECK(tokenize("...") == Strings{".", ".", "."});
    CHECK(tokenize("one\xC2\xA0two\xE2\x80\x83three　four") == Strings{"one", "two", "three", "four"});
    CHECK(tokenize("café-au-lait") == Strings{"café-au-lait"});
    CHECK(tokenize(" \t\n ").empty());
}

TEST_CASE("tokenize never yields empty tokens and preserves content") {
    Rng rng(21);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::string text = random_text(rng);
        std::string joined;
        for (const auto& t : tokenize(text)) {
            REQUIRE_FALSE(t.empty());
            joined += t;
        }
        std::string squeezed;
        for (const auto& piece : tokenize(joined)) {
            squeezed += piece;
        }
        CHECK(squeezed == joined);
    }
}

TEST_CASE("punctuation classification") {
    CHECK(is_punct_token("."));
    CHECK(is_punct_token("--"));
    CHECK_FALSE(is_punct_token("a."));
    CHECK_FALSE(is_punct_token("1"));
    CHECK_FALSE(is_punct_token("é"));
    CHECK_FALSE(is_punct_token(""));
}

TEST_CASE("porter examples") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("a") == "a");
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("cats") == "cat");
    CHECK(porter_stem("running") == "run");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("generalizations") == "gener");
    CHECK(porter_stem("") == "");
}

TEST_CASE("porter matches the reference vocabulary") {
    const auto pairs = porter_pairs();
    REQUIRE(pairs.size() == 23531);
    std::size_t mismatches = 0;
    for (const auto& [word, stem] : pairs) {
        mismatches += porter_stem(word) != stem;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("porter restemming never grows and settles") {
    // The reference algorithm is not idempotent: a stem can lose a further suffix on a second pass.
    CHECK(porter_stem("abuse") == "abus");
    CHECK(porter_stem("abus") == "abu");
    std::size_t unstable = 0;
    for (const auto& [word, stem] : porter_pairs()) {
        const std::string once = porter_stem(word);
        const std::string twice = porter_stem(once);
        CHECK(twice.size() <= once.size());
        CHECK(once.size() <= word.size());
        unstable += twice != once;
        auto s = twice;
        for (int i = 0; i < 10 && porter_stem(s) != s; ++i) {
            s = porter_stem(s);
        }
        CHECK(porter_stem(s) == s);
    }
    CHECK(unstable == 785);
}

TEST_CASE("heuristic tagger rules") {
    const HeuristicTagger tagger;
    CHECK(pos_tag(Strings{"quickly"}, tagger) == std::vector{CoarsePOS::Adv});
    CHECK(pos_tag(Strings{"the"}, tagger) == std::vector{CoarsePOS::Other});
    CHECK(pos_tag(Strings{"."}, tagger) == std::vector{CoarsePOS::Other});
    CHECK(tagger.tag_word("The") == CoarsePOS::Other);
    CHECK(tagger.tag_word("walking") == CoarsePOS::Verb);
    CHECK(tagger.tag_word("jumped") == CoarsePOS::Verb);
    CHECK(tagger.tag_word("realize") == CoarsePOS::Verb);
    CHECK(tagger.tag_word("create") == CoarsePOS::Verb);
    CHECK(tagger.tag_word("red") == CoarsePOS::Noun);
    CHECK(tagger.tag_word("famous") == CoarsePOS::Adj);
    CHECK(tagger.tag_word("careful") == CoarsePOS::Adj);
    CHECK(tagger.tag_word("massive") == CoarsePOS::Adj);
    CHECK(tagger.tag_word("capable") == CoarsePOS::Adj);
    CHECK(tagger.tag_word("formal") == CoarsePOS::Adj);
    CHECK(tagger.tag_word("run") == CoarsePOS::Noun);
    CHECK(tagger.tag_word("cat") == CoarsePOS::Noun);
    CHECK(tagger.tag_word("only") == CoarsePOS::Adv);

    const HeuristicTagger custom(WordList::parse("cat\n"));
    CHECK(custom.tag_word("cat") == CoarsePOS::Other);
    CHECK(custom.tag_word("the") == CoarsePOS::Noun);
}

TEST_CASE("pos_tag output length equals input length") {
    const HeuristicTagger tagger;
    Rng rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const auto toks = tokenize(random_text(rng));
        CHECK(pos_tag(toks, tagger).size() == toks.size());
    }
}

namespace {
class BrokenTagger final : public Tagger {
public:
    std::vector<CoarsePOS> tag(std::span<const std::string>) const override { return {CoarsePOS::Noun}; }
};
}  // namespace

TEST_CASE("pos_tag rejects a tagger that drops tokens") {
    CHECK_THROWS_WITH_AS(pos_tag(Strings{"a", "b"}, BrokenTagger{}), doctest::Contains("tag count mismatch"), Error);
}

TEST_CASE("pre-tagged input") {
    const auto sentences = parse_pretagged("Cats\tNOUN\nrun\tVERB\n.\tOTHER\n\n\nDogs\tNOUN\n", "tags");
    REQUIRE(sentences.size() == 2);
    CHECK(sentences[0].tokens == Strings{"Cats", "run", "."});
    const PretaggedTagger tagger(sentences);
    CHECK(pos_tag(Strings{"Cats", "run", "."}, tagger) ==
          std::vector{CoarsePOS::Noun, CoarsePOS::Verb, CoarsePOS::Other});
    CHECK_THROWS_AS(tagger.tag(Strings{"Unknown"}), Error);
    // Same surface text, different segmentation: found, then refused by the count check.
    CHECK_THROWS_WITH_AS(pos_tag(Strings{"Cats", "run."}, tagger), doctest::Contains("tag count mismatch"), Error);
    CHECK(tagger.tag(Strings{}).empty());

    CHECK_THROWS_WITH_AS(parse_pretagged("word\tVERBISH\n", "t.txt"), doctest::Contains("t.txt:1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_pretagged("a\tNOUN\nno-tab\n", "t.txt"), doctest::Contains("t.txt:2"), ParseError);
    CHECK(parse_pos("ADJ") == CoarsePOS::Adj);
    CHECK_THROWS_AS(parse_pos("adj"), Error);
}

TEST_CASE("word lists") {
    const auto list = WordList::parse("# header\nThe\n  and  # trailing\n\n");
    CHECK(list.size() == 2);
    CHECK(list.contains("the"));
    CHECK(list.contains("AND"));
    CHECK_FALSE(list.contains("header"));
    CHECK(WordList::default_stopwords().size() == 150);
    CHECK(WordList::default_stopwords().contains("however"));
    CHECK_FALSE(WordList::default_stopwords().contains("cat"));
    CHECK(WordList::default_closed_class().contains("the"));
    CHECK_FALSE(WordList::default_closed_class().contains("run"));
    CHECK_FALSE(shipped::cue_phrases().empty());
    CHECK_THROWS_AS(WordList::load("/nonexistent/stop.txt"), Error);
}

TEST_CASE("preprocess examples") {
    const HeuristicTagger tagger;
    const auto s = preprocess("Cats run.", tagger);
    REQUIRE(s.tokens.size() == 3);
    CHECK(s.tokens[0].stem == "cat");
    CHECK(s.tokens[1].stem == "run");
    CHECK(s.tokens[2].stem == ".");
    CHECK(s.tokens[0].pos == CoarsePOS::Noun);
    // "run" has fewer than five letters and no suffix, so the heuristic default is NOUN.
    CHECK(s.tokens[1].pos == CoarsePOS::Noun);
    CHECK(s.tokens[2].pos == CoarsePOS::Other);
    CHECK(s.tokens[2].is_punct);
    CHECK(s.raw == "Cats run.");

    // With a tagger that knows "run" is a verb, the expected POS sequence holds.
    const PretaggedTagger pretagged(parse_pretagged("Cats\tNOUN\nrun\tVERB\n.\tNOUN\n", "t"));
    const auto t = Preprocessor(pretagged, WordList::default_stopwords())("Cats run.");
    CHECK(t.tokens[1].pos == CoarsePOS::Verb);
    CHECK(t.tokens[2].pos == CoarsePOS::Other);

    CHECK(preprocess("", tagger).tokens.empty());
    const auto the = preprocess("The the THE", tagger);
    REQUIRE(the.tokens.size() == 3);
    for (const auto& tok : the.tokens) {
        CHECK(tok.is_stopword);
        CHECK_FALSE(tok.is_content());
    }
    CHECK(the.tokens[2].lower == "the");
}

TEST_CASE("open_class_count") {
    const Preprocessor pre;
    CHECK(open_class_count(pre("The cat sat .")) == 2);
    CHECK(open_class_count(pre("")) == 0);
    CHECK(open_class_count(pre("the of , and .")) == 0);
}

TEST_CASE("preprocess invariants") {
    const Preprocessor pre;
    Rng rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string text = random_text(rng);
        const auto s = pre(text);
        CHECK(s == pre(text));
        for (const auto& t : s.tokens) {
            if (t.is_punct) {
                CHECK(t.pos == CoarsePOS::Other);
            }
            bool has_letter = false;
            for (char c : t.lower) {
                has_letter |= (c >= 'a' && c <= 'z');
            }
            if (has_letter) {
                CHECK_FALSE(t.stem.empty());
            }
        }
    }
}
