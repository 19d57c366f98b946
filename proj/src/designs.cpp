#include "pgiso/designs.hpp"

#include <algorithm>
#include <map>

#include "pgiso/error.hpp"

namespace pgiso {

namespace {

std::vector<std::vector<Point>> point_lists(const std::vector<Flat>& flats) {
    std::vector<std::vector<Point>> out;
    out.reserve(flats.size());
    for (const Flat& f : flats) out.push_back(f.points());
    return out;
}

}  // namespace

Flat::Flat(std::vector<Point> points) : points_(std::move(points)), sorted_(points_) {
    std::sort(sorted_.begin(), sorted_.end());
    if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
        throw Error("flat lists a point twice");
    dim_ = rank(std::span<const Point>(points_));
    // Distinct points inside a rank-k subspace fill it iff there are 2^k - 1 of them.
    if (points_.size() != (std::size_t{1} << dim_) - 1)
        throw Error("points are not closed under addition (not a flat)");
}

Flat Flat::span_of(std::span<const Point> generators) { return Flat(span(generators)); }

bool Flat::contains(Point p) const { return std::binary_search(sorted_.begin(), sorted_.end(), p); }

bool Flat::contains(const Flat& other) const {
    return std::includes(sorted_.begin(), sorted_.end(), other.sorted_.begin(), other.sorted_.end());
}

Flat apply(const Collineation& c, const Flat& f) {
    std::vector<Point> pts;
    pts.reserve(f.size());
    for (Point p : f.points()) pts.push_back(c(p));
    return Flat(std::move(pts));
}

std::size_t flat_count(int a, int b) {
    if (b < 1 || a < b || a % b != 0) throw Error("no balanced spread exists: " + std::to_string(b) +
                                                  " does not divide " + std::to_string(a));
    return ((std::size_t{1} << a) - 1) / ((std::size_t{1} << b) - 1);
}

std::string to_string(SpreadViolation v) {
    switch (v) {
        case SpreadViolation::none: return "ok";
        case SpreadViolation::not_a_flat: return "not a flat";
        case SpreadViolation::not_disjoint: return "not disjoint";
        case SpreadViolation::not_covering: return "not covering";
        case SpreadViolation::wrong_count: return "wrong flat count";
    }
    return "unknown";
}

SpreadCheck validate_spread(std::span<const std::vector<Point>> flats, int u, int h) {
    if (u < 1 || u > kMaxFactors) return {SpreadViolation::wrong_count, 0, "u out of range"};
    if (h < 1 || h > u || u % h != 0)
        return {SpreadViolation::wrong_count, 0, "h=" + std::to_string(h) + " does not divide u=" + std::to_string(u)};

    const Mask limit = (Mask{1} << u) - 1;
    for (std::size_t i = 0; i < flats.size(); ++i) {
        try {
            for (Point p : flats[i])
                if (p.mask() > limit) throw Error("point " + to_label(p) + " outside PG(" + std::to_string(u - 1) + ",2)");
            Flat f(flats[i]);
            if (f.dimension() != h)
                throw Error("dimension " + std::to_string(f.dimension()) + ", expected " + std::to_string(h));
        } catch (const Error& e) {
            return {SpreadViolation::not_a_flat, i, e.what()};
        }
    }

    std::vector<std::size_t> owner(std::size_t{limit} + 1, flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i)
        for (Point p : flats[i]) {
            if (owner[p.mask()] != flats.size())
                return {SpreadViolation::not_disjoint, i,
                        to_label(p) + " lies in flats " + std::to_string(owner[p.mask()] + 1) + " and " +
                            std::to_string(i + 1)};
            owner[p.mask()] = i;
        }

    for (Mask m = 1; m <= limit; ++m)
        if (owner[m] == flats.size())
            return {SpreadViolation::not_covering, 0, to_label(Point(m)) + " is not covered"};

    const std::size_t mu = flat_count(u, h);
    if (flats.size() != mu)
        return {SpreadViolation::wrong_count, 0,
                std::to_string(flats.size()) + " flats, expected " + std::to_string(mu)};
    return {};
}

Spread::Spread(int u, int h, std::vector<Flat> flats) : u_(u), h_(h), flats_(std::move(flats)) {
    const auto lists = point_lists(flats_);
    const SpreadCheck check = validate_spread(lists, u, h);
    if (!check) throw Error("invalid spread: " + to_string(check.violation) + " (" + check.detail + ")");
}

std::size_t Spread::flat_of(Point p) const {
    for (std::size_t i = 0; i < flats_.size(); ++i)
        if (flats_[i].contains(p)) return i;
    throw Error("point " + to_label(p) + " outside the spread");
}

Spread apply(const Collineation& c, const Spread& s) {
    if (c.size() != s.u()) throw Error("collineation size does not match the spread");
    std::vector<Flat> flats;
    flats.reserve(s.mu());
    for (const Flat& f : s.flats()) flats.push_back(apply(c, f));
    return Spread(s.u(), s.h(), std::move(flats));
}

Flat nucleus_of(std::span<const Flat> rays) {
    if (rays.size() < 2) throw Error("not a star: need at least two rays");
    auto meet = [](const Flat& a, const Flat& b) {
        std::vector<Point> common;
        std::set_intersection(a.sorted_points().begin(), a.sorted_points().end(), b.sorted_points().begin(),
                              b.sorted_points().end(), std::back_inserter(common));
        return common;
    };
    const std::vector<Point> first = meet(rays[0], rays[1]);
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (meet(rays[i], rays[j]) != first)
                throw Error("not a star: rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " overlap differently");
    try {
        return Flat(first);
    } catch (const Error&) {
        throw Error("not a star: common overlap is not a flat");
    }
}

Star::Star(int n, int t, int t0, std::vector<Flat> rays)
    : n_(n), t_(t), t0_(t0), nucleus_(nucleus_of(rays)), rays_(std::move(rays)) {
    validate();
}

Star::Star(int n, int t, int t0, Flat nucleus, std::vector<Flat> rays)
    : n_(n), t_(t), t0_(t0), nucleus_(std::move(nucleus)), rays_(std::move(rays)) {
    validate();
}

void Star::validate() const {
    if (n_ < 1 || n_ > kMaxFactors) throw Error("not a star: n out of range");
    if (t0_ < 0 || t0_ >= t_ || t_ > n_) throw Error("not a star: need 0 <= t0 < t <= n");
    const std::size_t mu = flat_count(n_ - t0_, t_ - t0_);
    if (t_ == n_ && mu != 1) throw Error("not a star: t must be below n");
    if (rays_.size() != mu)
        throw Error("not a covering star: " + std::to_string(rays_.size()) + " rays, expected " + std::to_string(mu));
    if (nucleus_.dimension() != t0_) throw Error("not a star: nucleus dimension differs from t0");

    const Mask limit = (Mask{1} << n_) - 1;
    std::vector<std::size_t> hits(std::size_t{limit} + 1, 0);
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const Flat& r = rays_[i];
        if (r.dimension() != t_) throw Error("not a star: ray " + std::to_string(i + 1) + " has wrong dimension");
        if (!r.contains(nucleus_)) throw Error("not a star: ray " + std::to_string(i + 1) + " misses the nucleus");
        for (Point p : r.points()) {
            if (p.mask() > limit) throw Error("not a star: point " + to_label(p) + " outside P_n");
            ++hits[p.mask()];
        }
    }
    for (Mask m = 1; m <= limit; ++m) {
        const std::size_t want = nucleus_.contains(Point(m)) ? mu : 1;
        if (hits[m] == 0) throw Error("not a covering star: " + to_label(Point(m)) + " is not covered");
        if (hits[m] != want) throw Error("not a star: " + to_label(Point(m)) + " lies in several rays");
    }
}

Star apply(const Collineation& c, const Star& s) {
    if (c.size() != s.n()) throw Error("collineation size does not match the star");
    std::vector<Flat> rays;
    rays.reserve(s.mu());
    for (const Flat& r : s.rays()) rays.push_back(apply(c, r));
    return Star(s.n(), s.t(), s.t0(), apply(c, s.nucleus()), std::move(rays));
}

Star spread_to_star(const Spread& spread, int t0) {
    if (t0 < 0) throw Error("t0 must be non-negative");
    const int n = spread.u() + t0;
    if (n > kMaxFactors) throw Error("lifted star exceeds 15 factors");
    std::vector<Point> nucleus_gens;
    for (int i = spread.u(); i < n; ++i) nucleus_gens.emplace_back(Mask{1} << i);
    Flat nucleus = nucleus_gens.empty() ? Flat() : Flat::span_of(nucleus_gens);

    std::vector<Flat> rays;
    rays.reserve(spread.mu());
    for (const Flat& f : spread.flats()) {
        std::vector<Point> gens = f.points();
        gens.insert(gens.end(), nucleus_gens.begin(), nucleus_gens.end());
        rays.push_back(Flat::span_of(gens));
    }
    return Star(n, spread.h() + t0, t0, std::move(nucleus), std::move(rays));
}

NormalizedStar normalize_star(const Star& star) {
    const int n = star.n();
    const int u = star.u();
    if (star.t0() == 0)
        return {Spread(u, star.h(), star.rays()), Collineation::identity(n)};

    Gf2Basis basis;
    std::vector<Mask> nucleus_basis;
    for (Point p : star.nucleus().sorted_points())
        if (basis.insert(p.mask())) nucleus_basis.push_back(p.mask());
    std::vector<Mask> extension;
    for (Mask m = 1; basis.rank() < n; ++m)
        if (basis.insert(m)) extension.push_back(m);

    // Columns: F_1..F_u -> extension, F_{u+1}..F_n -> nucleus basis.
    std::vector<Mask> cols = extension;
    cols.insert(cols.end(), nucleus_basis.begin(), nucleus_basis.end());
    Collineation to_normal = Collineation(Gf2Matrix(n, std::move(cols))).inverse();

    std::vector<Flat> flats;
    flats.reserve(star.mu());
    for (const Flat& ray : star.rays()) {
        std::vector<Point> low;
        for (Point p : ray.points()) {
            Point q = to_normal(p);
            if ((q.mask() >> u) == 0) low.push_back(q);
        }
        flats.emplace_back(std::move(low));
    }
    return {Spread(u, star.h(), std::move(flats)), std::move(to_normal)};
}

}  // namespace pgiso
