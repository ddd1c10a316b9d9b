#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "simpqe/corpus/dataset.hpp"
#include "simpqe/corpus/labels.hpp"
#include "simpqe/util/error.hpp"
#include "simpqe/util/rng.hpp"

using namespace simpqe;

namespace {

const std::string kHeader = "id\toriginal\tsimplified\tgrammaticality\tmeaning\tsimplicity\toverall\n";

Dataset random_dataset(Rng& rng, std::size_t n) {
    Dataset ds;
    for (std::size_t i = 0; i < n; ++i) {
        SentencePair p;
        p.id = "p" + std::to_string(i);
        p.original = "original " + std::to_string(i);
        p.simplified = "simple " + std::to_string(i);
        for (auto& l : p.labels) {
            l = kAllLabels[rng.below(3)];
        }
        ds.pairs.push_back(p);
    }
    return ds;
}

}  // namespace

TEST_CASE("label parsing is case-insensitive and closed") {
    CHECK(parse_label("good") == AspectLabel::Good);
    CHECK(parse_label("OK") == AspectLabel::Ok);
    CHECK(parse_label("Bad") == AspectLabel::Bad);
    CHECK_THROWS_WITH_AS(parse_label("excellent"), doctest::Contains("unparseable label"), ParseError);
    CHECK(parse_aspect("Meaning") == Aspect::Meaning);
    CHECK_THROWS_AS(parse_aspect("fluency"), Error);
    for (Aspect a : kAllAspects) {
        CHECK(parse_aspect(to_string(a)) == a);
    }
}

TEST_CASE("label scores") {
    CHECK(label_to_score(AspectLabel::Good) == 100.0);
    CHECK(label_to_score(AspectLabel::Ok) == 50.0);
    CHECK(label_to_score(AspectLabel::Bad) == 0.0);
    CHECK(score_to_label(100) == AspectLabel::Good);
    CHECK(score_to_label(60) == AspectLabel::Ok);
    CHECK(score_to_label(75) == AspectLabel::Ok);
    CHECK(score_to_label(25) == AspectLabel::Ok);
    CHECK(score_to_label(24.999) == AspectLabel::Bad);
    CHECK(score_to_label(75.001) == AspectLabel::Good);
    CHECK_THROWS_AS(score_to_label(-1), Error);
    CHECK_THROWS_AS(score_to_label(100.5), Error);
    CHECK_THROWS_AS(score_to_label(std::nan("")), Error);
}

TEST_CASE("score mapping round-trips") {
    for (AspectLabel l : kAllLabels) {
        CHECK(score_to_label(label_to_score(l)) == l);
    }
    for (double s : {0.0, 50.0, 100.0}) {
        CHECK(label_to_score(score_to_label(s)) == s);
    }
}

TEST_CASE("parse_dataset reads rows in file order") {
    const auto ds = parse_dataset(kHeader + "a\tThe cat sat.\tCat sat.\tgood\tOK\tbad\t\n"
                                            "b\t  Long one. \tShort.\t\t\t\tgood\n",
                                  "mem");
    REQUIRE(ds.pairs.size() == 2);
    CHECK(ds.pairs[0].id == "a");
    CHECK(ds.pairs[0].label(Aspect::Grammaticality) == AspectLabel::Good);
    CHECK(ds.pairs[0].label(Aspect::Meaning) == AspectLabel::Ok);
    CHECK(ds.pairs[0].label(Aspect::Simplicity) == AspectLabel::Bad);
    CHECK_FALSE(ds.pairs[0].label(Aspect::Overall).has_value());
    CHECK(ds.pairs[1].original == "Long one.");
    CHECK_FALSE(ds.pairs[1].label(Aspect::Grammaticality).has_value());
    CHECK(ds.pairs[1].label(Aspect::Overall) == AspectLabel::Good);
    CHECK(ds.find("b") == 1u);
    CHECK_FALSE(ds.find("zz").has_value());
}

TEST_CASE("parse_dataset accepts unlabelled files, BOM and CRLF") {
    const auto ds = parse_dataset("\xEF\xBB\xBFid\toriginal\tsimplified\r\nx\tA b.\tA.\r\n", "mem");
    REQUIRE(ds.pairs.size() == 1);
    CHECK(ds.pairs[0].simplified == "A.");
    CHECK(parse_dataset(kHeader, "mem").pairs.empty());
}

TEST_CASE("parse_dataset errors name the line") {
    CHECK_THROWS_WITH_AS(parse_dataset(kHeader + "a\tx\ty\texcellent\t\t\t\n", "f.tsv"),
                         "f.tsv:2: unparseable label 'excellent'", ParseError);
    CHECK_THROWS_WITH_AS(parse_dataset(kHeader + "a\tx\ty\n", "f.tsv"),
                         doctest::Contains("f.tsv:2: malformed row"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dataset(kHeader + "a\t  \ty\t\t\t\t\n", "f.tsv"), doctest::Contains("empty sentence"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dataset(kHeader + "a\tx\ty\t\t\t\t\na\tx\ty\t\t\t\t\n", "f.tsv"),
                         "f.tsv:3: duplicate id 'a'", ParseError);
    CHECK_THROWS_AS(parse_dataset("id\ttext\n", "f.tsv"), ParseError);
    CHECK_THROWS_AS(parse_dataset("", "f.tsv"), ParseError);
    CHECK_THROWS_AS(load_dataset("/nonexistent/x.tsv"), Error);
}

TEST_CASE("dataset TSV round-trip") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset ds = random_dataset(rng, 1 + rng.below(40));
        for (auto& p : ds.pairs) {
            if (rng.below(4) == 0) {
                p.labels[rng.below(4)].reset();
            }
        }
        std::ostringstream out;
        write_dataset(out, ds);
        const Dataset back = parse_dataset(out.str(), "mem");
        CHECK(back.pairs == ds.pairs);
    }
}

TEST_CASE("dataset_stats") {
    const auto ds = parse_dataset(kHeader + "a\tx\ty\tgood\tgood\t\t\nb\tx\ty\tgood\tbad\t\t\n"
                                            "c\tx\ty\tok\tbad\t\t\nd\tx\ty\tbad\tbad\t\t\n",
                                  "mem");
    const auto stats = dataset_stats(ds);
    const auto& g = stats[index_of(Aspect::Grammaticality)];
    CHECK(g.at(AspectLabel::Good) == 50.0);
    CHECK(g.at(AspectLabel::Ok) == 25.0);
    CHECK(g.at(AspectLabel::Bad) == 25.0);
    CHECK(stats[index_of(Aspect::Meaning)].at(AspectLabel::Bad) == 75.0);
    CHECK(stats[index_of(Aspect::Simplicity)].empty());
    const std::string table = render_stats(stats);
    CHECK(table.find("Grammaticality        50.00   25.00   25.00\n") != std::string::npos);
    CHECK(table.find("Simplicity            -\n") != std::string::npos);
}

TEST_CASE("dataset_stats percentages sum to 100") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto stats = dataset_stats(random_dataset(rng, 1 + rng.below(300)));
        for (const auto& dist : stats) {
            double sum = 0;
            for (const auto& [label, pct] : dist) {
                sum += pct;
            }
            CHECK(std::abs(sum - 100.0) <= 0.01);
        }
    }
}

TEST_CASE("stratified_kfold examples") {
    Rng rng(1);
    const Dataset ds505 = random_dataset(rng, 505);
    const auto folds = stratified_kfold(ds505, Aspect::Simplicity, 10, 42);
    REQUIRE(folds.size() == 10);
    std::size_t of51 = 0, of50 = 0;
    for (const auto& f : folds) {
        of51 += f.size() == 51;
        of50 += f.size() == 50;
    }
    CHECK(of51 == 5);
    CHECK(of50 == 5);
    CHECK(stratified_kfold(ds505, Aspect::Simplicity, 10, 42) == folds);
    CHECK(stratified_kfold(ds505, Aspect::Simplicity, 10, 43) != folds);

    Dataset all_good = random_dataset(rng, 10);
    for (auto& p : all_good.pairs) {
        p.label(Aspect::Meaning) = AspectLabel::Good;
    }
    for (const auto& f : stratified_kfold(all_good, Aspect::Meaning, 5, 9)) {
        CHECK(f.size() == 2);
    }
}

TEST_CASE("stratified_kfold rejects bad input") {
    Rng rng(2);
    Dataset ds = random_dataset(rng, 5);
    CHECK_THROWS_AS(stratified_kfold(ds, Aspect::Overall, 1, 0), Error);
    CHECK_THROWS_AS(stratified_kfold(ds, Aspect::Overall, 6, 0), Error);
    ds.pairs[3].label(Aspect::Overall).reset();
    CHECK_THROWS_WITH_AS(stratified_kfold(ds, Aspect::Overall, 2, 0), doctest::Contains("p3"), Error);
}

TEST_CASE("stratified_kfold partition properties") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const Dataset ds = random_dataset(rng, 20 + rng.below(200));
        const Aspect aspect = kAllAspects[rng.below(4)];
        const std::size_t k = 2 + rng.below(9);
        const auto folds = stratified_kfold(ds, aspect, k, rng.next());
        REQUIRE(folds.size() == k);

        std::set<std::string> seen;
        std::size_t total = 0;
        std::size_t min_size = SIZE_MAX, max_size = 0;
        std::array<std::size_t, kNumLabels> min_class, max_class;
        min_class.fill(SIZE_MAX);
        max_class.fill(0);
        for (const auto& f : folds) {
            total += f.size();
            min_size = std::min(min_size, f.size());
            max_size = std::max(max_size, f.size());
            std::array<std::size_t, kNumLabels> per{};
            std::size_t last = 0;
            for (const auto& id : f) {
                seen.insert(id);
                const auto idx = *ds.find(id);
                CHECK(idx >= last);
                last = idx;
                ++per[index_of(*ds.pairs[idx].label(aspect))];
            }
            for (std::size_t c = 0; c < kNumLabels; ++c) {
                min_class[c] = std::min(min_class[c], per[c]);
                max_class[c] = std::max(max_class[c], per[c]);
            }
        }
        CHECK(total == ds.pairs.size());
        CHECK(seen.size() == ds.pairs.size());
        CHECK(max_size - min_size <= 1);
        for (std::size_t c = 0; c < kNumLabels; ++c) {
            CHECK(max_class[c] - min_class[c] <= 1);
        }
    }
}
