#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "pgiso/error.hpp"
#include "pgiso/gf2.hpp"

using namespace pgiso;
using pgiso::test::pt;
using pgiso::test::pts;

namespace {

std::set<Mask> as_set(const std::vector<Point>& v) {
    std::set<Mask> s;
    for (Point p : v) s.insert(p.mask());
    return s;
}

// A normalizing matrix and its inverse, written row by row.
const Gf2Matrix kC1Inverse = Gf2Matrix::from_rows({{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 0}});
const Gf2Matrix kC1 = Gf2Matrix::from_rows({{0, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 0, 0, 0}});

}  // namespace

TEST_CASE("yates index follows binary factor encoding") {
    CHECK(yates_index(pt("A", 4)) == 1);
    CHECK(yates_index(pt("ABCD", 4)) == 15);
    // Independent check: sum of 2^(i-1) over participating factors.
    CHECK(yates_index(pt("D", 4)) == 8);
    CHECK(yates_index(pt("AC", 4)) == 1 + 4);

    std::vector<std::string> yates;
    for (std::size_t i = 1; i <= 7; ++i) yates.push_back(to_label(point_from_index(i, 3)));
    CHECK(yates == std::vector<std::string>{"A", "B", "AB", "C", "AC", "BC", "ABC"});
}

TEST_CASE("index and point conversions are inverse") {
    for (int n = 1; n <= 8; ++n)
        for (std::size_t i = 1; i < (std::size_t{1} << n); ++i) {
            Point p = point_from_index(i, n);
            REQUIRE(yates_index(p) == i);
            REQUIRE(parse_label(to_label(p), n) == p);
        }
    CHECK_THROWS_AS(point_from_index(0, 4), Error);
    CHECK_THROWS_AS(point_from_index(16, 4), Error);
    CHECK_THROWS_AS(Point(0), Error);
}

TEST_CASE("labels parse in any order and print alphabetically") {
    CHECK(to_label(parse_label("DCB", 4)) == "BCD");
    CHECK_THROWS_AS(parse_label("AA", 4), Error);
    CHECK_THROWS_AS(parse_label("E", 4), Error);
    CHECK_THROWS_AS(parse_label("", 4), Error);
    CHECK_THROWS_AS(parse_label("ab", 4), Error);
}

TEST_CASE("span") {
    SUBCASE("two independent points give a line") {
        CHECK(as_set(span(pts({"A", "B"}, 4))) == as_set(pts({"A", "B", "AB"}, 4)));
    }
    SUBCASE("closure order matches the reference flat") {
        auto s = span(pts({"D", "BC"}, 4));
        REQUIRE(s.size() == 3);
        CHECK(to_label(s[0]) == "D");
        CHECK(to_label(s[1]) == "BC");
        CHECK(to_label(s[2]) == "BCD");
    }
    SUBCASE("closed input is returned unchanged") {
        auto in = pts({"A", "B", "AB"}, 4);
        CHECK(span(in) == in);
    }
    SUBCASE("empty generators") { CHECK_THROWS_WITH_AS(span(std::vector<Point>{}), "empty generator set", Error); }
}

TEST_CASE("span size and idempotence on random independent sets") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 7;
        std::uniform_int_distribution<Mask> any(1, (Mask{1} << n) - 1);
        std::vector<Point> gens;
        Gf2Basis basis;
        const int k = 1 + trial % n;
        while (static_cast<int>(gens.size()) < k) {
            Mask m = any(rng);
            if (basis.insert(m)) gens.emplace_back(m);
        }
        auto s = span(gens);
        REQUIRE(s.size() == (std::size_t{1} << k) - 1);
        REQUIRE(as_set(span(s)) == as_set(s));
    }
}

TEST_CASE("rank") {
    CHECK(rank(pts({"A", "B", "AB"}, 4)) == 2);
    CHECK(rank(kC1) == 4);
    // Three lines of PG(5,2) that fail to span it.
    CHECK(rank(pts({"F", "ABCE", "E", "ABDEF", "EF", "CDF"}, 6)) < 6);
    CHECK(rank(pts({"F", "ABCE", "E", "ABDEF", "D", "ACDF"}, 6)) == 6);
}

TEST_CASE("invert") {
    CHECK(invert(Gf2Matrix::identity(5)) == Gf2Matrix::identity(5));
    CHECK(invert(kC1Inverse) == kC1);
    CHECK(invert(kC1) == kC1Inverse);
    Gf2Matrix twin(3, {0b011, 0b011, 0b100});
    CHECK_THROWS_WITH_AS(invert(twin), "not a collineation", Error);
    CHECK_THROWS_AS(Collineation{twin}, Error);
}

TEST_CASE("inverse properties on random full-rank matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 10;
        Collineation c = test::random_collineation(n, rng);
        const Gf2Matrix inv = invert(c.matrix());
        REQUIRE(c.matrix() * inv == Gf2Matrix::identity(n));
        REQUIRE(inv * c.matrix() == Gf2Matrix::identity(n));
        REQUIRE(invert(inv) == c.matrix());
    }
}

TEST_CASE("rank is invariant under row operations") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 9;
        std::uniform_int_distribution<Mask> any(0, (Mask{1} << n) - 1);
        std::uniform_int_distribution<int> row(0, n - 1);
        std::vector<Mask> cols(static_cast<std::size_t>(n));
        for (auto& c : cols) c = any(rng);
        const int before = rank(Gf2Matrix(n, cols));

        const int i = row(rng);
        int j = row(rng);
        if (j == i) j = (i + 1) % n;
        std::vector<Mask> swapped = cols, added = cols;
        for (auto& c : swapped) {
            const Mask bi = (c >> i) & 1U, bj = (c >> j) & 1U;
            if (bi != bj) c ^= (Mask{1} << i) | (Mask{1} << j);
        }
        for (auto& c : added)
            if ((c >> j) & 1U) c ^= Mask{1} << i;  // row_i += row_j
        REQUIRE(rank(Gf2Matrix(n, swapped)) == before);
        REQUIRE(rank(Gf2Matrix(n, added)) == before);
    }
}

TEST_CASE("embed fixes the added factors") {
    Gf2Matrix e = embed(kC1, 6);
    CHECK(e.size() == 6);
    CHECK(e.column(4) == 0b010000);
    CHECK(e.column(5) == 0b100000);
    CHECK(e.column(0) == kC1.column(0));
}

TEST_CASE("grid output is row-wise") {
    CHECK(to_grid(kC1) == "0 0 0 1\n1 1 0 0\n1 1 1 0\n1 0 0 0\n");
}
