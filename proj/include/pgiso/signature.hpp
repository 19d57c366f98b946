#pragma once

// Order-blind fingerprints of spreads and stars.
//
// Prime mode assigns the i-th smallest prime to the i-th point in Yates order
// and fingerprints a flat by the product over its points; unique
// factorization makes the product identify the point set. Bitstring mode
// fingerprints a flat by its membership bitmask over P_n. In both modes the
// design's signature is the sorted list of flat fingerprints, so two designs
// are equivalent exactly when their signatures are equal.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgiso/designs.hpp"

namespace pgiso {

using BigInt = boost::multiprecision::cpp_int;

/// The 2^n - 1 smallest primes; prime(i) belongs to the point with Yates index i.
class PrimeTable {
public:
    /// Shared, lazily built table for 1 <= n <= 15.
    static const PrimeTable& get(int n);

    int dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return primes_.size(); }
    std::uint32_t prime(std::size_t yates_index) const { return primes_.at(yates_index - 1); }

private:
    explicit PrimeTable(int n);

    int n_;
    std::vector<std::uint32_t> primes_;
};

/// Membership bitmask over the 2^n - 1 points; bit i-1 is the point with Yates index i.
/// Ordered as an unsigned integer.
class BitString {
public:
    BitString() = default;
    explicit BitString(int n);

    void set(std::size_t yates_index);
    bool test(std::size_t yates_index) const;
    std::size_t count() const noexcept;

    /// Hexadecimal, most significant digit first, no leading zeros ("0" when empty).
    std::string to_hex() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

private:
    std::vector<std::uint64_t> words_;
};

BigInt lambda_flat(const Flat& f, int n);
BitString bitstring_flat(const Flat& f, int n);

enum class Repr { prime, bitstring };

struct Signature {
    std::variant<std::vector<BigInt>, std::vector<BitString>> values;

    Repr repr() const noexcept { return values.index() == 0 ? Repr::prime : Repr::bitstring; }
    std::size_t size() const noexcept;

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(std::span<const Flat> flats, int n, Repr repr);
Signature signature(const Spread& s, Repr repr = Repr::prime);
Signature signature(const Star& s, Repr repr = Repr::prime);

/// "(595, 1798, ...)" in prime mode, hexadecimal masks in bitstring mode.
std::string to_string(const Signature& sig);

/// Throws pgiso::Error when the parameters (u, h) or (n, t, t0) differ.
bool equivalent(const Spread& a, const Spread& b, Repr repr = Repr::prime);
bool equivalent(const Star& a, const Star& b, Repr repr = Repr::prime);

}  // namespace pgiso
