#pragma once

// GF(2^u) arithmetic over a primitive polynomial and the cyclic spread construction.
//
// Polynomials are bitmasks: bit i is the coefficient of w^i, so w^4 + w + 1 is
// 0b10011 = 19. Field elements are u-bit masks in the basis {w^0, ..., w^(u-1)}.
//
// Elements become points by reversing coordinates: the coefficient of w^j is
// factor F_{u-j}, so w^0 is the last letter. With w^4 + w + 1 this gives
// w^0 -> D and w^5 = w^2 + w -> BC.

#include <cstdint>
#include <vector>

#include "pgiso/designs.hpp"
#include "pgiso/gf2.hpp"

namespace pgiso {

struct FieldElem {
    Mask rep = 0;

    friend bool operator==(FieldElem, FieldElem) = default;
};

/// Throws pgiso::Error if poly does not have degree exactly u.
bool is_primitive(std::uint64_t poly, int u);

/// All primitive polynomials of degree u, ascending.
std::vector<Mask> primitive_polynomials(int u);

class FieldSpec {
public:
    /// Throws pgiso::Error unless poly is primitive of degree u (1 <= u <= 15).
    FieldSpec(int u, Mask poly);

    int degree() const noexcept { return u_; }
    Mask poly() const noexcept { return poly_; }
    std::uint32_t order() const noexcept { return (std::uint32_t{1} << u_) - 1; }

    FieldElem one() const noexcept { return {1}; }
    FieldElem omega() const noexcept { return {u_ == 1 ? Mask{1} : Mask{2}}; }

    FieldElem add(FieldElem a, FieldElem b) const noexcept { return {a.rep ^ b.rep}; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept;
    FieldElem pow(FieldElem a, std::uint64_t k) const noexcept;

    /// Throws pgiso::Error for zero.
    Point to_point(FieldElem e) const;
    FieldElem from_point(Point p) const noexcept;

private:
    int u_;
    Mask poly_;
};

/// Prime divisors of m, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// Cyclic (h-1)-spread: flat i (0-based) holds beta^(k*mu + i), k = 0..2^h-2,
/// where beta = w^(2^conjugate) and mu = (2^u-1)/(2^h-1). Elements are
/// written in the w-basis.
Spread cyclic_spread(const FieldSpec& field, int h, int conjugate = 0);

/// Coefficient-space matrix whose column j is beta^j in the w-basis, beta = w^(2^k).
/// Rows and columns index coefficients of w^0..w^(u-1), not factors.
Gf2Matrix change_root_basis(const FieldSpec& field, int k);

/// The same linear map expressed on points (coefficient order reversed), so it
/// can act on spreads as a collineation.
Collineation root_change_collineation(const FieldSpec& field, int k);

}  // namespace pgiso
