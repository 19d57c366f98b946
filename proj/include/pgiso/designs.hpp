#pragma once

// Flats, balanced spreads and balanced covering stars of PG(n-1,2).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgiso/gf2.hpp"

namespace pgiso {

/// The nonzero points of a GF(2) subspace.
///
/// Points keep the order they were given in (used for display and for
/// point-index based relabelling); membership tests use a Yates-sorted copy.
class Flat {
public:
    /// Empty flat (dimension 0); the nucleus of a star with t0 = 0.
    Flat() = default;

    /// Throws pgiso::Error unless the points are distinct and closed under addition.
    explicit Flat(std::vector<Point> points);

    static Flat span_of(std::span<const Point> generators);

    const std::vector<Point>& points() const noexcept { return points_; }
    const std::vector<Point>& sorted_points() const noexcept { return sorted_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    int dimension() const noexcept { return dim_; }

    bool contains(Point p) const;
    bool contains(const Flat& other) const;

    /// Set equality, ignoring point order.
    bool same_points(const Flat& other) const { return sorted_ == other.sorted_; }

private:
    std::vector<Point> points_;
    std::vector<Point> sorted_;
    int dim_ = 0;
};

Flat apply(const Collineation& c, const Flat& f);

/// (2^a - 1) / (2^b - 1): flats per spread, rays per covering star.
std::size_t flat_count(int a, int b);

enum class SpreadViolation { none, not_a_flat, not_disjoint, not_covering, wrong_count };

struct SpreadCheck {
    SpreadViolation violation = SpreadViolation::none;
    std::size_t flat = 0;  // offending flat index, when meaningful
    std::string detail;

    explicit operator bool() const noexcept { return violation == SpreadViolation::none; }
};

std::string to_string(SpreadViolation v);

/// Reports the first failing clause in the order: flatness, disjointness, cover, count.
SpreadCheck validate_spread(std::span<const std::vector<Point>> flats, int u, int h);

/// A balanced (h-1)-spread of PG(u-1,2).
class Spread {
public:
    /// Throws pgiso::Error carrying the validation report on failure.
    Spread(int u, int h, std::vector<Flat> flats);

    int u() const noexcept { return u_; }
    int h() const noexcept { return h_; }
    std::size_t mu() const noexcept { return flats_.size(); }
    const std::vector<Flat>& flats() const noexcept { return flats_; }
    const Flat& flat(std::size_t i) const { return flats_.at(i); }

    /// Index of the flat containing p.
    std::size_t flat_of(Point p) const;

private:
    int u_;
    int h_;
    std::vector<Flat> flats_;
};

Spread apply(const Collineation& c, const Spread& s);

/// A balanced covering star St(n, mu, t, t0): mu rays of dimension t sharing a
/// nucleus of dimension t0 and covering PG(n-1,2).
class Star {
public:
    /// Nucleus is derived from the rays (requires at least two rays).
    Star(int n, int t, int t0, std::vector<Flat> rays);
    /// Explicit nucleus; also admits the single-ray star of a trivial spread.
    Star(int n, int t, int t0, Flat nucleus, std::vector<Flat> rays);

    int n() const noexcept { return n_; }
    int t() const noexcept { return t_; }
    int t0() const noexcept { return t0_; }
    int u() const noexcept { return n_ - t0_; }
    int h() const noexcept { return t_ - t0_; }
    std::size_t mu() const noexcept { return rays_.size(); }
    const Flat& nucleus() const noexcept { return nucleus_; }
    const std::vector<Flat>& rays() const noexcept { return rays_; }

private:
    void validate() const;

    int n_;
    int t_;
    int t0_;
    Flat nucleus_;
    std::vector<Flat> rays_;
};

Star apply(const Collineation& c, const Star& s);

/// Intersection of all rays; throws pgiso::Error("not a star") if pairwise
/// intersections differ or the intersection is not a flat.
Flat nucleus_of(std::span<const Flat> rays);

/// Lifts a spread of PG(u-1,2) to the star spread x <F_{u+1}, ..., F_{u+t0}>.
/// With t0 = 0 the rays are the spread's flats and the nucleus is empty.
Star spread_to_star(const Spread& spread, int t0);

struct NormalizedStar {
    Spread spread;
    Collineation to_normal;  // C0 with C0(star) = spread x <F_{u+1}, ..., F_n>
};

NormalizedStar normalize_star(const Star& star);

}  // namespace pgiso
