#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "simpqe/util/error.hpp"
#include "simpqe/util/parallel.hpp"
#include "simpqe/util/rng.hpp"
#include "simpqe/util/text_io.hpp"

using namespace simpqe;

TEST_CASE("split keeps empty fields") {
    const auto parts = split("a\t\tb\t", '\t');
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == "a");
    CHECK(parts[1].empty());
    CHECK(parts[2] == "b");
    CHECK(parts[3].empty());
    CHECK(split("", ',').size() == 1);
}

TEST_CASE("trim and case helpers") {
    CHECK(trim("  x y \t\r\n") == "x y");
    CHECK(trim(" \t ").empty());
    CHECK(to_lower_ascii("MiXeD ÄB") == "mixed Äb");
    CHECK(iequals_ascii("GOOD", "good"));
    CHECK_FALSE(iequals_ascii("good", "goods"));
}

TEST_CASE("for_each_line numbers lines and strips CR") {
    std::vector<std::string> seen;
    std::vector<std::size_t> numbers;
    for_each_line("one\r\ntwo\n\nfour", [&](std::size_t n, std::string_view l) {
        numbers.push_back(n);
        seen.emplace_back(l);
    });
    CHECK(seen == std::vector<std::string>{"one", "two", "", "four"});
    CHECK(numbers == std::vector<std::size_t>{1, 2, 3, 4});

    std::istringstream in("a\r\nb\n");
    seen.clear();
    for_each_line(in, [&](std::size_t, std::string_view l) { seen.emplace_back(l); });
    CHECK(seen == std::vector<std::string>{"a", "b"});
}

TEST_CASE("strict numeric parsing") {
    double d = 0;
    CHECK(parse_double("1.5e-3", d));
    CHECK(d == doctest::Approx(0.0015));
    CHECK(parse_double("+2", d));
    CHECK(d == 2.0);
    CHECK_FALSE(parse_double("1.5x", d));
    CHECK_FALSE(parse_double("", d));
    std::uint64_t u = 0;
    CHECK(parse_uint("42", u));
    CHECK(u == 42);
    CHECK_FALSE(parse_uint("-1", u));
    std::int64_t i = 0;
    CHECK(parse_int("-7", i));
    CHECK(i == -7);
    CHECK_FALSE(parse_int("7 ", i));
}

TEST_CASE("format_exact round-trips doubles") {
    Rng rng(7);
    for (int n = 0; n < 1000; ++n) {
        const double v = static_cast<double>(rng.next()) / 3.0e7 - 1.0e11;
        double back = 0;
        REQUIRE(parse_double(format_exact(v), back));
        CHECK(back == v);
    }
    CHECK(format_fixed(75.6435, 2) == "75.64");
    CHECK(format_sig(1.0 / 3.0, 4) == "0.3333");
}

TEST_CASE("header fields") {
    std::vector<std::pair<std::string, std::string>> kv;
    CHECK(parse_header_fields("magic v1 a=1 b=x", 2, kv));
    REQUIRE(kv.size() == 2);
    CHECK(kv[1] == std::pair<std::string, std::string>{"b", "x"});
    kv.clear();
    CHECK_FALSE(parse_header_fields("magic v1 broken", 2, kv));
}

TEST_CASE("ParseError carries location") {
    const ParseError e("file.tsv", 12, "bad row");
    CHECK(std::string(e.what()) == "file.tsv:12: bad row");
    CHECK(e.line() == 12);
    CHECK(std::string(ParseError("", 0, "x").what()) == "x");
    CHECK_THROWS_AS(read_file("/nonexistent/definitely/missing"), Error);
}

TEST_CASE("Rng is reproducible and bounded") {
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
    // mt19937_64 with the default seed produces this value as its 10000th output.
    std::mt19937_64 ref;
    ref.discard(9999);
    CHECK(ref() == 9981545732273789042ULL);

    Rng r(1);
    std::array<int, 5> hist{};
    for (int i = 0; i < 5000; ++i) {
        const auto v = r.below(5);
        REQUIRE(v < 5);
        ++hist[v];
    }
    for (int h : hist) {
        CHECK(h > 800);
    }
}

TEST_CASE("shuffle is a permutation") {
    std::vector<int> v(50);
    std::iota(v.begin(), v.end(), 0);
    Rng r(3);
    r.shuffle(std::span<int>(v));
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 50; ++i) {
        CHECK(sorted[i] == i);
    }
    CHECK_FALSE(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("parallel_for visits every index once and rethrows") {
    for (std::size_t jobs : {1u, 2u, 8u, 0u}) {
        std::vector<std::atomic<int>> hits(200);
        parallel_for(hits.size(), jobs, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (auto& h : hits) {
            CHECK(h.load() == 1);
        }
    }
    CHECK_THROWS_AS(parallel_for(10, 4,
                                 [](std::size_t i) {
                                     if (i == 3) {
                                         throw std::runtime_error("boom");
                                     }
                                 }),
                    std::runtime_error);
    parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}
