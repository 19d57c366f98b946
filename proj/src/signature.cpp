#include "pgiso/signature.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "pgiso/error.hpp"

namespace pgiso {

namespace {

std::vector<std::uint32_t> first_primes(std::size_t count) {
    // Rosser's bound p_k < k (ln k + ln ln k) for k >= 6.
    const double k = static_cast<double>(std::max<std::size_t>(count, 6));
    const auto limit = static_cast<std::size_t>(k * (std::log(k) + std::log(std::log(k)))) + 16;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    out.reserve(count);
    for (std::size_t p = 2; p <= limit && out.size() < count; ++p) {
        if (composite[p]) continue;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::size_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

PrimeTable::PrimeTable(int n) : n_(n), primes_(first_primes((std::size_t{1} << n) - 1)) {}

const PrimeTable& PrimeTable::get(int n) {
    if (n < 1 || n > kMaxFactors) throw Error("prime tables support 1 <= n <= 15");
    static std::mutex lock;
    static std::array<std::unique_ptr<PrimeTable>, kMaxFactors + 1> tables;
    std::scoped_lock guard(lock);
    auto& slot = tables[static_cast<std::size_t>(n)];
    if (!slot) slot.reset(new PrimeTable(n));
    return *slot;
}

BitString::BitString(int n) : words_((((std::size_t{1} << n) - 1) + 63) / 64, 0) {}

void BitString::set(std::size_t yates_index) {
    const std::size_t bit = yates_index - 1;
    words_.at(bit / 64) |= std::uint64_t{1} << (bit % 64);
}

bool BitString::test(std::size_t yates_index) const {
    const std::size_t bit = yates_index - 1;
    return (words_.at(bit / 64) >> (bit % 64)) & 1U;
}

std::size_t BitString::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BitString::to_hex() const {
    std::ostringstream out;
    bool leading = true;
    for (auto it = words_.rbegin(); it != words_.rend(); ++it) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            const unsigned digit = static_cast<unsigned>((*it >> shift) & 0xFU);
            if (leading && digit == 0) continue;
            leading = false;
            out << "0123456789abcdef"[digit];
        }
    }
    return leading ? "0" : out.str();
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

BigInt lambda_flat(const Flat& f, int n) {
    const PrimeTable& table = PrimeTable::get(n);
    BigInt product = 1;
    for (Point p : f.points()) product *= table.prime(yates_index(p));
    return product;
}

BitString bitstring_flat(const Flat& f, int n) {
    BitString bits(n);
    for (Point p : f.points()) bits.set(yates_index(p));
    return bits;
}

std::size_t Signature::size() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, values);
}

Signature signature(std::span<const Flat> flats, int n, Repr repr) {
    if (repr == Repr::prime) {
        std::vector<BigInt> v;
        v.reserve(flats.size());
        for (const Flat& f : flats) v.push_back(lambda_flat(f, n));
        return {sorted(std::move(v))};
    }
    std::vector<BitString> v;
    v.reserve(flats.size());
    for (const Flat& f : flats) v.push_back(bitstring_flat(f, n));
    return {sorted(std::move(v))};
}

Signature signature(const Spread& s, Repr repr) { return signature(s.flats(), s.u(), repr); }

Signature signature(const Star& s, Repr repr) { return signature(s.rays(), s.n(), repr); }

std::string to_string(const Signature& sig) {
    std::ostringstream out;
    out << '(';
    std::visit(
        [&](const auto& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out << ", ";
                if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, BigInt>)
                    out << v[i];
                else
                    out << "0x" << v[i].to_hex();
            }
        },
        sig.values);
    out << ')';
    return out.str();
}

bool equivalent(const Spread& a, const Spread& b, Repr repr) {
    if (a.u() != b.u() || a.h() != b.h()) throw Error("spreads have different parameters (u, h)");
    return signature(a, repr) == signature(b, repr);
}

bool equivalent(const Star& a, const Star& b, Repr repr) {
    if (a.n() != b.n() || a.t() != b.t() || a.t0() != b.t0())
        throw Error("stars have different parameters (n, t, t0)");
    return signature(a, repr) == signature(b, repr);
}

}  // namespace pgiso
