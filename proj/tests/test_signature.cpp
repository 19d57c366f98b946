#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pgiso/classify.hpp"
#include "pgiso/error.hpp"
#include "pgiso/field.hpp"
#include "pgiso/signature.hpp"

using namespace pgiso;
using test::flat;

namespace {

std::vector<BigInt> primes_of(const Signature& s) { return std::get<std::vector<BigInt>>(s.values); }

std::vector<BigInt> big(std::initializer_list<long long> v) {
    std::vector<BigInt> out;
    for (long long x : v) out.emplace_back(x);
    return out;
}

// Relabelled spread as listed after Example 1's first normalization step.
Spread psi1_normal() {
    return test::spread_from(4, 2, {{"A", "B", "AB"}, {"C", "D", "CD"}, {"BC", "ABD", "ACD"}, {"BCD", "ABC", "AD"},
                                    {"AC", "ABCD", "BD"}});
}

// A -> AB, B -> AC, C -> C, D -> CD.
Collineation example_relabelling() { return Collineation(Gf2Matrix(4, {0b0011, 0b0101, 0b0100, 0b1100})); }

}  // namespace

TEST_CASE("prime table") {
    const PrimeTable& t4 = PrimeTable::get(4);
    CHECK(t4.size() == 15);
    CHECK(t4.prime(1) == 2);
    CHECK(t4.prime(2) == 3);
    CHECK(t4.prime(3) == 5);
    CHECK(t4.prime(15) == 47);
    CHECK(PrimeTable::get(6).prime(63) == 307);
    const PrimeTable& t15 = PrimeTable::get(15);
    CHECK(t15.size() == 32767);
    for (std::size_t i = 2; i <= t15.size(); ++i) REQUIRE(t15.prime(i) > t15.prime(i - 1));
    CHECK_THROWS_AS(PrimeTable::get(16), Error);
}

TEST_CASE("lambda of single flats") {
    CHECK(lambda_flat(flat({"C", "AB", "ABC"}, 4), 4) == 595);
    CHECK(lambda_flat(flat({"D", "BC", "BCD"}, 4), 4) == 10621);
    CHECK(lambda_flat(flat({"A"}, 4), 4) == 2);
}

TEST_CASE("reference prime signatures") {
    CHECK(primes_of(signature(catalog::psi1())) == big({595, 1798, 5781, 9361, 10621}));
    CHECK(primes_of(signature(catalog::psi2())) == big({715, 1798, 4921, 5781, 16813}));
    CHECK(primes_of(signature(psi1_normal())) == big({30, 4921, 14993, 16523, 16813}));
    CHECK(to_string(signature(catalog::psi1())) == "(595, 1798, 5781, 9361, 10621)");
}

TEST_CASE("equivalence") {
    std::mt19937 rng(1);
    CHECK_FALSE(equivalent(catalog::psi1(), catalog::psi2()));
    CHECK(equivalent(catalog::psi1(), test::shuffled(catalog::psi1(), rng)));
    CHECK(equivalent(apply(example_relabelling(), psi1_normal()), catalog::psi2()));
    // Swapping the images of C and D lands {AD, B, ABD}, which is not a flat of psi2.
    const Collineation swapped(Gf2Matrix(4, {0b0011, 0b0101, 0b1100, 0b0100}));
    CHECK_FALSE(equivalent(apply(swapped, psi1_normal()), catalog::psi2()));
    CHECK_FALSE(equivalent(catalog::omega1(), catalog::omega2()));
    CHECK_THROWS_AS(equivalent(catalog::psi1(), catalog::psi3()), Error);
}

TEST_CASE("signatures ignore every rearrangement") {
    std::mt19937 rng(42);
    const std::vector<Spread> spreads = {catalog::psi1(), catalog::psi2(), catalog::psi3(), catalog::psi4()};
    for (const Spread& s : spreads)
        for (Repr repr : {Repr::prime, Repr::bitstring})
            for (int k = 0; k < 25; ++k) REQUIRE(signature(test::shuffled(s, rng), repr) == signature(s, repr));
    for (int k = 0; k < 25; ++k) REQUIRE(signature(test::shuffled(catalog::omega2(), rng)) == signature(catalog::omega2()));
}

TEST_CASE("flat fingerprints identify point sets") {
    for (int h : {1, 2, 3}) {
        const std::vector<Flat> flats = enumerate_flats(4, h);
        for (const Flat& a : flats)
            for (const Flat& b : flats) {
                REQUIRE((lambda_flat(a, 4) == lambda_flat(b, 4)) == a.same_points(b));
                REQUIRE((bitstring_flat(a, 4) == bitstring_flat(b, 4)) == a.same_points(b));
            }
    }
}

TEST_CASE("prime and bitstring modes agree") {
    std::mt19937 rng(9);
    const std::vector<Spread> spreads = enumerate_spreads(4, 2);
    for (int k = 0; k < 200; ++k) {
        const Spread& a = spreads[rng() % spreads.size()];
        const Spread& b = spreads[rng() % spreads.size()];
        REQUIRE(equivalent(a, b, Repr::prime) == equivalent(a, b, Repr::bitstring));
    }
    CHECK(equivalent(catalog::psi3(), catalog::psi4(), Repr::prime) ==
          equivalent(catalog::psi3(), catalog::psi4(), Repr::bitstring));
}

TEST_CASE("signature length and strict ordering") {
    for (const Spread& s : {catalog::psi1(), catalog::psi3(), cyclic_spread(FieldSpec(6, 67), 3)}) {
        for (Repr repr : {Repr::prime, Repr::bitstring}) {
            const Signature sig = signature(s, repr);
            REQUIRE(sig.size() == flat_count(s.u(), s.h()));
            std::visit(
                [](const auto& v) {
                    for (std::size_t i = 1; i < v.size(); ++i) REQUIRE(v[i - 1] < v[i]);
                },
                sig.values);
        }
    }
    CHECK(signature(catalog::omega1()).size() == 5);
}

TEST_CASE("products outgrow 64 bits") {
    // Rays of this star of PG(7,2) multiply fifteen primes.
    const Star star = spread_to_star(catalog::psi3(), 2);
    const auto values = primes_of(signature(star));
    CHECK(values.back() > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("bitstring rendering") {
    const Signature s = signature(catalog::psi1(), Repr::bitstring);
    // {A, BD, ABD} = Yates 1, 10, 11.
    CHECK(to_string(s).find("0x601") != std::string::npos);
    CHECK(BitString(4).to_hex() == "0");
}
