#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pgiso/classify.hpp"
#include "pgiso/error.hpp"
#include "pgiso/field.hpp"
#include "pgiso/iso.hpp"

using namespace pgiso;
using test::labels;

namespace {

std::vector<std::string> point_labels(const std::vector<Point>& v) {
    std::vector<std::string> out;
    for (Point p : v) out.push_back(to_label(p));
    return out;
}

Spread reorder(const Spread& s, const std::vector<std::size_t>& order) {
    std::vector<Flat> flats;
    for (std::size_t i : order) flats.push_back(s.flat(i));
    return Spread(s.u(), s.h(), std::move(flats));
}

IsoOptions sequential() { return {.deterministic = true, .jobs = 1, .prune = true}; }

}  // namespace

TEST_CASE("find_lif on the PG(3,2) example") {
    const Lif lif = find_lif(catalog::psi1());
    CHECK(lif.flat_indices == std::vector<std::size_t>{0, 1});
    CHECK(point_labels(lif.basis_points) == std::vector<std::string>{"D", "BC", "C", "AB"});
}

TEST_CASE("find_lif skips a flat that falls in the span") {
    // f1, f2, f7 of the PG(5,2) table: the third is inside <f1, f2>.
    const Spread s = catalog::psi3();
    std::vector<std::size_t> order = {0, 1, 6};
    for (std::size_t i = 2; i < s.mu(); ++i)
        if (i != 6) order.push_back(i);
    const Spread moved = reorder(s, order);
    CHECK(rank(std::vector<Point>{moved.flat(0).points()[0], moved.flat(0).points()[1], moved.flat(1).points()[0],
                                  moved.flat(1).points()[1], moved.flat(2).points()[0], moved.flat(2).points()[1]}) < 6);
    const Lif lif = find_lif(moved);
    REQUIRE(lif.flat_indices.size() == 3);
    CHECK(lif.flat_indices[0] == 0);
    CHECK(lif.flat_indices[1] == 1);
    CHECK(lif.flat_indices[2] != 2);
    CHECK(rank(lif.basis_points) == 6);
}

TEST_CASE("trivial spread") {
    const Spread whole = cyclic_spread(FieldSpec(4, 19), 4);
    const Lif lif = find_lif(whole);
    CHECK(lif.flat_indices == std::vector<std::size_t>{0});
    CHECK(lif.basis_points.size() == 4);
    const IsoResult r = iso_spreads(whole, whole);
    CHECK(r.verdict == Verdict::isomorphic);
}

TEST_CASE("normalize_lif reproduces the reference relabelling") {
    const LifNormalForm nf = normalize_lif(catalog::psi1(), find_lif(catalog::psi1()));
    CHECK(nf.lif_size == 2);
    // Rows 0001/1100/1110/1000.
    CHECK(nf.to_normal.matrix() == Gf2Matrix::from_rows({{0, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 0, 0, 0}}));
    CHECK(labels(nf.spread.flat(0)) == std::vector<std::string>{"A", "B", "AB"});
    CHECK(labels(nf.spread.flat(1)) == std::vector<std::string>{"C", "D", "CD"});
    CHECK(to_string(signature(nf.spread)) == "(30, 4921, 14993, 16523, 16813)");

    const LifNormalForm again = normalize_lif(nf.spread, find_lif(nf.spread));
    CHECK(again.to_normal == Collineation::identity(4));
}

TEST_CASE("build_relabelling") {
    const LifNormalForm nf = normalize_lif(catalog::psi1(), find_lif(catalog::psi1()));
    const RelabelIndex idx{{0, 2}, {{0, 1}, {0, 2}}};
    const auto c = build_relabelling(idx, nf.spread, catalog::psi2());
    REQUIRE(c.has_value());
    CHECK(to_label((*c)(test::pt("A", 4))) == "AB");
    CHECK(to_label((*c)(test::pt("B", 4))) == "AC");
    CHECK(to_label((*c)(test::pt("C", 4))) == "C");
    CHECK(to_label((*c)(test::pt("D", 4))) == "CD");
    CHECK(equivalent(apply(*c, nf.spread), catalog::psi2()));

    SUBCASE("dependent targets") {
        const Spread s3 = catalog::psi3();
        const RelabelIndex bad{{0, 1, 6}, {{0, 1}, {0, 1}, {0, 1}}};
        CHECK_FALSE(build_relabelling(bad, s3, s3).has_value());
    }
    SUBCASE("identity") {
        const RelabelIndex id{{0, 1}, {{0, 1}, {0, 1}}};
        CHECK(build_relabelling(id, nf.spread, nf.spread) == std::optional(Collineation::identity(4)));
    }
    SUBCASE("malformed") {
        CHECK_THROWS_AS(build_relabelling({{0}, {{0, 1}}}, nf.spread, catalog::psi2()), Error);
        CHECK_THROWS_AS(build_relabelling({{0, 0}, {{0, 1}, {0, 2}}}, nf.spread, catalog::psi2()), Error);
        CHECK_THROWS_AS(build_relabelling({{0, 9}, {{0, 1}, {0, 2}}}, nf.spread, catalog::psi2()), Error);
        CHECK_THROWS_AS(build_relabelling({{0, 1}, {{0, 3}, {0, 2}}}, nf.spread, catalog::psi2()), Error);
    }
}

TEST_CASE("isomorphism of the PG(3,2) spreads and stars") {
    const IsoResult r = iso_spreads(catalog::psi1(), catalog::psi2(), sequential());
    CHECK(r.verdict == Verdict::isomorphic);
    REQUIRE(r.witness);
    CHECK(verify_witness(*r.witness, catalog::psi1(), catalog::psi2()));
    CHECK(r.relabellings_tried >= 1);
    CHECK(r.relabellings_tried <= count_search_space(4, 2));

    const IsoResult s = iso_stars(catalog::omega1(), catalog::omega2(), sequential());
    CHECK(s.verdict == Verdict::isomorphic);
    REQUIRE(s.witness);
    CHECK(s.witness->size() == 5);
    CHECK(verify_witness(*s.witness, catalog::omega1(), catalog::omega2()));
    CHECK_FALSE(verify_witness(Collineation::identity(5), catalog::omega1(), catalog::omega2()));
}

TEST_CASE("equivalent inputs short-circuit") {
    std::mt19937 rng(3);
    const IsoResult r = iso_spreads(catalog::psi1(), test::shuffled(catalog::psi1(), rng));
    CHECK(r.verdict == Verdict::isomorphic);
    CHECK(r.relabellings_tried == 0);
    CHECK(*r.witness == Collineation::identity(4));
}

TEST_CASE("non-isomorphic PG(5,2) pair") {
    const IsoResult r = iso_spreads(catalog::psi3(), catalog::psi4(), sequential());
    CHECK(r.verdict == Verdict::non_isomorphic);
    CHECK_FALSE(r.witness);
    CHECK(r.relabellings_tried <= count_search_space(6, 2));
    CHECK(r.relabellings_tried > 0);
}

TEST_CASE("isomorphism under random collineations") {
    std::mt19937 rng(11);
    const std::vector<Spread> spreads = {catalog::psi3(), cyclic_spread(FieldSpec(6, 67), 3),
                                         cyclic_spread(FieldSpec(6, 91), 2), catalog::psi1()};
    for (const Spread& s : spreads) {
        const Spread moved = test::shuffled(apply(test::random_collineation(s.u(), rng), s), rng);
        const IsoResult r = iso_spreads(s, moved);
        REQUIRE(r.verdict == Verdict::isomorphic);
        REQUIRE(verify_witness(*r.witness, s, moved));
        const IsoResult back = iso_spreads(moved, s);
        REQUIRE(back.verdict == Verdict::isomorphic);
        REQUIRE(verify_witness(r.witness->inverse(), moved, s));
    }
}

TEST_CASE("witnesses compose") {
    std::mt19937 rng(23);
    const Spread a = catalog::psi1();
    const Spread b = apply(test::random_collineation(4, rng), catalog::psi2());
    const Spread c = test::shuffled(apply(test::random_collineation(4, rng), a), rng);
    const IsoResult ab = iso_spreads(a, b);
    const IsoResult bc = iso_spreads(b, c);
    REQUIRE(ab.witness);
    REQUIRE(bc.witness);
    CHECK(verify_witness(*bc.witness * *ab.witness, a, c));
}

TEST_CASE("parallel and sequential searches agree") {
    std::mt19937 rng(8);
    const Spread s3 = catalog::psi3();
    const Spread image = apply(test::random_collineation(6, rng), s3);
    for (unsigned jobs : {1U, 2U, 4U}) {
        const IsoOptions opt{.deterministic = false, .jobs = jobs, .prune = true};
        CHECK(iso_spreads(s3, image, opt).verdict == Verdict::isomorphic);
        CHECK(iso_spreads(s3, catalog::psi4(), opt).verdict == Verdict::non_isomorphic);
    }
    const IsoResult d1 = iso_spreads(s3, image, sequential());
    const IsoResult d2 = iso_spreads(s3, image, sequential());
    CHECK(d1.relabelling == d2.relabelling);
    CHECK(d1.relabellings_tried == d2.relabellings_tried);
}

TEST_CASE("disabling pruning visits the whole search space") {
    const IsoOptions opt{.deterministic = true, .jobs = 1, .prune = false};
    const IsoResult r = iso_spreads(catalog::psi3(), catalog::psi4(), opt);
    CHECK(r.verdict == Verdict::non_isomorphic);
    CHECK(r.relabellings_tried == count_search_space(6, 2));
}

TEST_CASE("brute force oracle") {
    const IsoResult r = brute_force_iso(catalog::psi1(), catalog::psi2());
    CHECK(r.verdict == Verdict::isomorphic);
    CHECK(verify_witness(*r.witness, catalog::psi1(), catalog::psi2()));
    CHECK_THROWS_AS(brute_force_iso(cyclic_spread(FieldSpec(5, 37), 5), cyclic_spread(FieldSpec(5, 37), 5)), Error);
}

TEST_CASE("counting formulas") {
    CHECK(count_collineations(1) == 1);
    CHECK(count_collineations(4) == 20160);
    CHECK(count_collineations(5) == 9999360);
    CHECK(count_equiv_class(4, 2, 0) == 933120);
    CHECK(count_equiv_class(4, 3, 2) == BigInt("768144384000"));
    CHECK(count_equiv_class(5, 3, 1) == BigInt("390241927692288000000"));
    CHECK(count_naive(4, 2, 0) == BigInt("18811699200"));
    CHECK(count_naive(5, 3, 1) == BigInt("3902169522089156935680000000"));
    CHECK(count_search_space(4, 2) == 720);
    CHECK(count_search_space(6, 2) == 1723680);
    CHECK(count_search_space(6, 3) == 2032128);
    CHECK_THROWS_AS(count_equiv_class(5, 1, 1), Error);
}
