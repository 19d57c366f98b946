#include "pgiso/field.hpp"

#include <bit>

#include "pgiso/error.hpp"

namespace pgiso {

namespace {

int degree_of(std::uint64_t poly) { return std::bit_width(poly) - 1; }

// x * y mod poly, everything below 2^u.
std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t poly, int u) {
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << u;
    while (y != 0) {
        if (y & 1U) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top) x ^= poly;
    }
    return r;
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t k, std::uint64_t poly, int u) {
    std::uint64_t r = 1;
    while (k != 0) {
        if (k & 1U) r = mulmod(r, x, poly, u);
        x = mulmod(x, x, poly, u);
        k >>= 1;
    }
    return r;
}

Mask reverse_bits(Mask v, int u) {
    Mask out = 0;
    for (int j = 0; j < u; ++j)
        if ((v >> j) & 1U) out |= Mask{1} << (u - 1 - j);
    return out;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        out.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_primitive(std::uint64_t poly, int u) {
    if (u < 1 || u > 31) throw Error("degree out of range");
    if (poly == 0 || degree_of(poly) != u)
        throw Error("polynomial " + std::to_string(poly) + " does not have degree " + std::to_string(u));
    if ((poly & 1U) == 0) return false;  // w divides poly
    // w has order exactly 2^u - 1 iff w^(2^u-1) = 1 and no maximal proper divisor works.
    // That order is only reachable when the quotient ring is a field, so irreducibility follows.
    const std::uint64_t group = (std::uint64_t{1} << u) - 1;
    const std::uint64_t w = mulmod(1, 2, poly, u);
    if (powmod(w, group, poly, u) != 1) return false;
    for (std::uint64_t q : prime_factors(group))
        if (powmod(w, group / q, poly, u) == 1) return false;
    return true;
}

std::vector<Mask> primitive_polynomials(int u) {
    if (u < 1 || u > kMaxFactors) throw Error("degree out of range");
    std::vector<Mask> out;
    for (Mask p = Mask{1} << u; p < (Mask{2} << u); ++p)
        if (is_primitive(p, u)) out.push_back(p);
    return out;
}

FieldSpec::FieldSpec(int u, Mask poly) : u_(u), poly_(poly) {
    if (u < 1 || u > kMaxFactors) throw Error("field degree must lie in [1, 15]");
    if (!is_primitive(poly, u)) throw Error("polynomial " + std::to_string(poly) + " is not primitive");
}

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const noexcept {
    return {static_cast<Mask>(mulmod(a.rep, b.rep, poly_, u_))};
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t k) const noexcept {
    return {static_cast<Mask>(powmod(a.rep, k, poly_, u_))};
}

Point FieldSpec::to_point(FieldElem e) const { return Point(reverse_bits(e.rep, u_)); }

FieldElem FieldSpec::from_point(Point p) const noexcept { return {reverse_bits(p.mask(), u_)}; }

Spread cyclic_spread(const FieldSpec& field, int h, int conjugate) {
    const int u = field.degree();
    if (h < 1 || u % h != 0)
        throw Error("no balanced spread exists: h=" + std::to_string(h) + " does not divide u=" + std::to_string(u));
    if (conjugate < 0 || conjugate >= u) throw Error("conjugate index must lie in [0, u-1]");
    const std::size_t mu = flat_count(u, h);
    const std::size_t per_flat = (std::size_t{1} << h) - 1;

    const FieldElem beta = field.pow(field.omega(), std::uint64_t{1} << conjugate);
    std::vector<FieldElem> powers(field.order());
    powers[0] = field.one();
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = field.mul(powers[i - 1], beta);

    std::vector<Flat> flats;
    flats.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        std::vector<Point> pts;
        pts.reserve(per_flat);
        for (std::size_t k = 0; k < per_flat; ++k) pts.push_back(field.to_point(powers[k * mu + i]));
        flats.emplace_back(std::move(pts));
    }
    return Spread(u, h, std::move(flats));
}

Gf2Matrix change_root_basis(const FieldSpec& field, int k) {
    const int u = field.degree();
    if (k < 0 || k >= u) throw Error("conjugate index must lie in [0, u-1]");
    const FieldElem beta = field.pow(field.omega(), std::uint64_t{1} << k);
    std::vector<Mask> cols;
    FieldElem x = field.one();
    for (int j = 0; j < u; ++j, x = field.mul(x, beta)) cols.push_back(x.rep);
    return Gf2Matrix(u, std::move(cols));
}

Collineation root_change_collineation(const FieldSpec& field, int k) {
    const Gf2Matrix m = change_root_basis(field, k);
    const int u = field.degree();
    // Point column for F_{u-j} is the reversed image of coefficient vector e_j.
    std::vector<Mask> cols(static_cast<std::size_t>(u));
    for (int j = 0; j < u; ++j) cols[static_cast<std::size_t>(u - 1 - j)] = reverse_bits(m.column(j), u);
    return Collineation(Gf2Matrix(u, std::move(cols)));
}

}  // namespace pgiso
