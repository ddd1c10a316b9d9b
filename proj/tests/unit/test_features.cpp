#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "simpqe/features/features.hpp"
#include "simpqe/features/idf.hpp"
#include "simpqe/features/similarity.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/rng.hpp"

using namespace simpqe;
using Strings = std::vector<std::string>;

namespace {

const Preprocessor& pre() {
    static const Preprocessor p;
    return p;
}

AnalyzedPair pair_of(const std::string& original, const std::string& simplified) {
    return analyze(SentencePair{"p", original, simplified, {}}, pre());
}

ResourceBundle empty_bundle() {
    return ResourceBundle{train_ngram(std::vector<Strings>{{"a"}}, 2), EmbeddingTable::parse("1 1\nx 1\n", "e"),
                          SynonymLexicon{}, FrequencyTable("r"), FrequencyTable("s"), CuePhraseList::shipped()};
}

// Dense reference: explicit term index, explicit dot product and norms.
double dense_cosine(const std::vector<double>& a, const std::vector<double>& b) {
    long double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += static_cast<long double>(a[i]) * b[i];
        na += static_cast<long double>(a[i]) * a[i];
        nb += static_cast<long double>(b[i]) * b[i];
    }
    if (na == 0 || nb == 0) {
        return 0.0;
    }
    return static_cast<double>(dot / (std::sqrt(na) * std::sqrt(nb)));
}

}  // namespace

TEST_CASE("sparse cosine matches a dense brute-force computation") {
    Rng rng(123);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dims = 1 + rng.below(12);
        std::vector<double> da(dims, 0.0), db(dims, 0.0);
        SparseVector a, b;
        for (std::size_t d = 0; d < dims; ++d) {
            const std::string term = "t" + std::to_string(d);
            if (rng.below(2)) {
                da[d] = static_cast<double>(rng.below(2001)) / 100.0 - 10.0;
                a[term] = da[d];
            }
            if (rng.below(2)) {
                db[d] = static_cast<double>(rng.below(2001)) / 100.0 - 10.0;
                b[term] = db[d];
            }
        }
        const double got = cosine(a, b);
        CHECK(std::abs(got - dense_cosine(da, db)) <= 1e-12);
        CHECK(got == cosine(b, a));
        CHECK(std::abs(cosine(std::span<const double>(da), std::span<const double>(db)) - got) <= 1e-12);
    }
}

TEST_CASE("cosine edge cases") {
    CHECK(cosine(SparseVector{}, SparseVector{{"a", 1.0}}) == 0.0);
    CHECK(cosine(SparseVector{{"a", 0.0}}, SparseVector{{"a", 1.0}}) == 0.0);
    const SparseVector v{{"a", 0.1}, {"b", 0.7}, {"c", 3.3}};
    CHECK(cosine(v, v) == 1.0);
    CHECK(cosine(SparseVector{{"a", 1}, {"b", 1}}, SparseVector{{"a", 1}, {"c", 1}}) == doctest::Approx(0.5));
    const std::vector<double> x{1, 2}, y{1, 2, 3};
    CHECK_THROWS_AS(cosine(std::span<const double>(x), std::span<const double>(y)), Error);
    const std::vector<double> big{1e200, 1e200}, tiny{1e-200, 1e-200};
    CHECK(cosine(std::span<const double>(big), std::span<const double>(big)) == doctest::Approx(1.0));
    CHECK(cosine(std::span<const double>(tiny), std::span<const double>(tiny)) == doctest::Approx(1.0));
}

TEST_CASE("idf formula") {
    IdfTable idf;
    for (int i = 0; i < 10; ++i) {
        idf.add_document(pre()(i < 4 ? "cat" : "dog"));
    }
    CHECK(idf.documents() == 10);
    CHECK(idf.document_frequency("cat") == 4);
    CHECK(idf.idf("cat") == doctest::Approx(std::log(11.0 / 5.0) + 1.0).epsilon(1e-15));
    CHECK(idf.idf("unseen") == doctest::Approx(std::log(11.0) + 1.0).epsilon(1e-15));

    IdfTable all;
    all.add_document(pre()("cat"));
    all.add_document(pre()("cats and cat"));
    CHECK(all.document_frequency("cat") == 2);
    CHECK(all.idf("cat") == 1.0);
}

TEST_CASE("build_idf uses both sides of every pair") {
    const std::vector<AnalyzedPair> pairs{pair_of("big cat", "cat"), pair_of("dog", "big dog")};
    const IdfTable idf = build_idf(pairs);
    CHECK(idf.documents() == 4);
    CHECK(idf.document_frequency("big") == 2);
    CHECK(idf.document_frequency("cat") == 2);
    CHECK(idf.document_frequency("the") == 0);
    CHECK_THROWS_AS(build_idf(std::span<const AnalyzedPair>{}), Error);
}

TEST_CASE("idf save and parse round-trip") {
    IdfTable idf;
    idf.add_document(pre()("big cat"));
    idf.add_document(pre()("big dog"));
    std::ostringstream out;
    idf.save(out);
    CHECK(out.str() == "simpqe-idf v1 D=2\nbig\t2\ncat\t1\ndog\t1\n");
    const IdfTable back = IdfTable::parse(out.str(), "i");
    CHECK(back.documents() == 2);
    CHECK(back.idf("cat") == idf.idf("cat"));
    CHECK_THROWS_AS(IdfTable::parse("simpqe-idf v1 D=1\ncat\t2\n", "i"), ParseError);
    CHECK_THROWS_AS(IdfTable::parse("nonsense\n", "i"), ParseError);
}

TEST_CASE("tfidf cosine on a toy idf matches a hand calculation") {
    // Four documents: big cat / big dog / big bird / cat.
    IdfTable idf;
    for (const char* doc : {"big cat", "big dog", "big bird", "cat"}) {
        idf.add_document(pre()(doc));
    }
    const double i_big = std::log(5.0 / 4.0) + 1.0;
    const double i_cat = std::log(5.0 / 3.0) + 1.0;
    const double i_dog = std::log(5.0 / 2.0) + 1.0;
    // dense order: big, cat, dog
    const double expected = dense_cosine({i_big, i_cat, 0.0}, {i_big, 0.0, i_dog});
    CHECK(std::abs(feat_tfidf_cosine(pair_of("big cat", "big dog"), idf) - expected) <= 1e-12);
    CHECK(expected == doctest::Approx(0.33854).epsilon(1e-4));

    CHECK(feat_tfidf_cosine(pair_of("the big cat sat", "the big cat sat"), idf) == 1.0);
    CHECK(feat_tfidf_cosine(pair_of("big cat", "small dog"), idf) == 0.0);
    CHECK(feat_tfidf_cosine(pair_of("the of", "big"), idf) == 0.0);
}

TEST_CASE("grammaticality features") {
    const NGramModel toy = train_ngram(std::vector<Strings>{{"a", "b", "a", "b"}}, 2);
    const auto g = feat_grammaticality(pair_of("x", "a b"), toy);
    CHECK(std::abs(g.loglik_per_token - std::log10(0.5) / 3.0) <= 1e-12);
    CHECK(std::abs(g.perplexity - std::pow(10.0, -std::log10(0.5) / 3.0)) <= 1e-12);

    const NGramModel certain = train_ngram(std::vector<Strings>{{"a"}}, 2);
    const auto one = feat_grammaticality(pair_of("x", "A"), certain);
    CHECK(one.loglik_per_token == 0.0);
    CHECK(one.perplexity == 1.0);

    const auto seen = feat_grammaticality(pair_of("x", "a b a"), toy);
    const auto oov = feat_grammaticality(pair_of("x", "zzz qqq"), toy);
    CHECK(seen.loglik_per_token > oov.loglik_per_token);

    // The original side is ignored.
    CHECK(feat_grammaticality(pair_of("zzz zzz zzz", "a b"), toy).loglik_per_token == g.loglik_per_token);
    CHECK_THROWS_AS(feat_grammaticality(pair_of("x", "\t"), toy), Error);
}

TEST_CASE("embedding similarity") {
    const auto emb = EmbeddingTable::parse("3 2\ncat 1 0\na 1 0\nb 0 1\n", "e");
    CHECK(feat_embedding_similarity(pair_of("cat", "cat"), emb) == 1.0);
    CHECK(feat_embedding_similarity(pair_of("zzz", "cat"), emb) == 0.0);
    CHECK(feat_embedding_similarity(pair_of("cat", "qqq ."), emb) == 0.0);
    CHECK(feat_embedding_similarity(pair_of("a b", "a"), emb) == 0.5);
    CHECK(feat_embedding_similarity(pair_of("Cat .", "cat"), emb) == 1.0);
}

TEST_CASE("synonym-expanded cosine") {
    CHECK(feat_synonym_cosine(pair_of("the big cat sat", "the big cat sat"), SynonymLexicon{}) == 1.0);
    CHECK(feat_synonym_cosine(pair_of("x y", "x z"), SynonymLexicon{}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(feat_synonym_cosine(pair_of(".", "x"), SynonymLexicon{}) == 0.0);

    const auto lex = SynonymLexicon::parse("happy\tADJ\tglad\nglad\tADJ\thappy\n", "s");
    const PretaggedTagger tagger(parse_pretagged("happy\tADJ\n\nglad\tADJ\n", "t"));
    const Preprocessor tagged(tagger, WordList::default_stopwords());
    const auto p = analyze(SentencePair{"p", "happy", "glad", {}}, tagged);
    CHECK(feat_synonym_cosine(p, lex) == 1.0);
    // The heuristic tags both words NOUN, so the ADJ entries do not apply.
    CHECK(feat_synonym_cosine(pair_of("happy", "glad"), lex) == 0.0);

    const auto v = synonym_expanded_vector(tagged("happy"), lex);
    CHECK(v == SparseVector{{"glad", 1.0}, {"happy", 1.0}});
}

TEST_CASE("difference features") {
    CHECK(feat_length_diff(pair_of("cats dogs mice birds fish", "cats dogs mice")) == 2);
    CHECK(feat_length_diff(pair_of("the of and", "a the")) == 0);
    CHECK(feat_avg_word_len_diff(pair_of("elephant", "cat")) == 5.0);
    CHECK(feat_avg_word_len_diff(pair_of("ab cd", "abcd")) == -2.0);
    CHECK(feat_avg_word_len_diff(pair_of("café", "cafe")) == 0.0);
    CHECK(feat_avg_word_len_diff(pair_of(". ,", "ab")) == -2.0);

    FrequencyTable reg("r");
    reg.add("cat", 10);
    reg.add("dog", 4);
    CHECK(feat_regular_wiki_freq_diff(pair_of("cat", "dog"), reg) == 6.0);
    CHECK(feat_regular_wiki_freq_diff(pair_of("zebra", "yak"), reg) == 0.0);
    FrequencyTable simple("s");
    simple.add("cat", 2);
    simple.add("dog", 8);
    CHECK(feat_simple_wiki_freq_diff(pair_of("cat", "dog"), simple) == -6.0);
    CHECK(feat_simple_wiki_freq_diff(pair_of("cat", "dog"), FrequencyTable("e")) == 0.0);

    const auto& cues = CuePhraseList::shipped();
    CHECK(feat_cue_diff(pair_of("However , I left because it rained .", "I left ."), cues) == 2);
    CHECK(feat_cue_diff(pair_of("I left .", "Then I left ."), cues) == -1);
}

TEST_CASE("identical sentences") {
    const auto bundle = empty_bundle();
    IdfTable idf;
    for (const char* s : {"The old man sat by the fire , however tired .", "Cats run .", "Dogs bark loudly"}) {
        const auto p = pair_of(s, s);
        idf.add_document(p.original);
        const auto f = assemble_features(p, bundle, idf);
        CHECK(f.meaning.values[1] == 1.0);
        CHECK(f.simplicity.values[0] == 1.0);
        for (std::size_t i = 1; i < 6; ++i) {
            CHECK(f.simplicity.values[i] == 0.0);
        }
    }
}

TEST_CASE("feature names and shape") {
    CHECK(feature_names(Aspect::Grammaticality).size() == 2);
    CHECK(feature_names(Aspect::Meaning).size() == 2);
    CHECK(feature_names(Aspect::Simplicity).size() == 6);
    CHECK(feature_names(Aspect::Overall).empty());
    CHECK(feature_names(Aspect::Simplicity)[0] == "tfidf_cosine");
    CHECK(feature_names(Aspect::Simplicity)[5] == "cue_diff");
    CHECK(all_feature_names().size() == 10);
    PairFeatures f;
    CHECK_THROWS_AS(f.for_aspect(Aspect::Overall), Error);
}

TEST_CASE("assemble_features on a toy pair matches per-feature hand values") {
    ResourceBundle res{
        train_ngram(std::vector<Strings>{{"the", "cat", "runs", "."}}, 2),
        EmbeddingTable::parse("3 2\ncat 1 0\nruns 0 1\nhowever 1 1\n", "e"),
        SynonymLexicon::parse("big\tNOUN\tlarge\n", "s"),
        FrequencyTable::parse("simpqe-freq v1 total=15 name=r\nbig\t1\ncat\t10\nrun\t4\n", "r"),
        FrequencyTable::parse("simpqe-freq v1 total=6 name=s\ncat\t6\n", "s"),
        CuePhraseList::shipped(),
    };
    const auto p = pair_of("However the big cat runs.", "The cat runs.");
    IdfTable idf;
    idf.add_document(p.original);
    idf.add_document(p.simplified);
    const auto f = assemble_features(p, res, idf);

    const double i_big = std::log(3.0 / 2.0) + 1.0;
    const std::vector<double> expected{
        0.0,                                      // every bigram of the simplified side was seen
        1.0,                                      //
        (2.0 + std::sqrt(2.0)) / 6.0,             // {however, cat, runs} x {cat, runs}
        1.0 / std::sqrt(2.0),                     // 3 / (sqrt 6 * sqrt 3), "big" expands to "large"
        2.0 / (std::sqrt(i_big * i_big + 2.0) * std::sqrt(2.0)),
        1.0,                                      // big cat runs vs cat runs
        4.0 - 10.0 / 3.0,                         // 20/5 - 10/3
        5.0 - 7.0,                                // (1+10+4)/3 - (10+4)/2
        2.0 - 3.0,                                // 6/3 - 6/2
        1.0,                                      // "however"
    };
    const auto flat = f.flat();
    REQUIRE(flat.size() == expected.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        INFO(all_feature_names()[i]);
        CHECK(std::abs(flat[i] - expected[i]) <= 1e-12);
    }
    CHECK(f.pair_id == "p");
}

TEST_CASE("extraction is deterministic across jobs and runs") {
    const auto bundle = empty_bundle();
    std::vector<SentencePair> pairs;
    for (int i = 0; i < 40; ++i) {
        pairs.push_back({"p" + std::to_string(i), "The big cat number " + std::to_string(i) + " ran away.",
                         "A cat ran " + std::string(static_cast<std::size_t>(i % 5 + 1), 'x') + ".", {}});
    }
    const auto a1 = analyze(pairs, pre(), 1);
    const auto a4 = analyze(pairs, pre(), 4);
    REQUIRE(a1.size() == a4.size());
    for (std::size_t i = 0; i < a1.size(); ++i) {
        CHECK(a1[i].original == a4[i].original);
    }
    const IdfTable idf = build_idf(a1);
    std::ostringstream s1, s4;
    write_feature_dump(s1, extract_features(a1, bundle, idf, 1));
    write_feature_dump(s4, extract_features(a4, bundle, idf, 4));
    CHECK(s1.str() == s4.str());

    std::istringstream lines(s1.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "pair_id\tloglik_per_token\tperplexity\tembedding_similarity\tsynonym_cosine\ttfidf_cosine\tlength_diff\t"
          "avg_word_len_diff\tregular_wiki_freq_diff\tsimple_wiki_freq_diff\tcue_diff");
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), '\t') == 10);
    }
    CHECK(rows == 40);
}
