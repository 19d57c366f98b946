#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pgiso/catalog.hpp"
#include "pgiso/designs.hpp"
#include "pgiso/gf2.hpp"

namespace pgiso::test {

inline Point pt(const std::string& label, int n) { return parse_label(label, n); }

inline std::vector<Point> pts(std::initializer_list<const char*> labels, int n) {
    std::vector<Point> out;
    for (const char* l : labels) out.push_back(parse_label(l, n));
    return out;
}

inline std::vector<std::string> labels(const Flat& f) {
    std::vector<std::string> out;
    for (Point p : f.points()) out.push_back(to_label(p));
    return out;
}

inline Flat flat(std::initializer_list<const char*> l, int n) { return Flat(pts(l, n)); }

inline Spread spread_from(int u, int h, std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<Flat> flats;
    for (auto row : rows) flats.push_back(flat(row, u));
    return Spread(u, h, std::move(flats));
}

/// Flats compared as a set of point sets.
inline bool same_flat_sets(const std::vector<Flat>& a, const std::vector<Flat>& b) {
    auto key = [](const std::vector<Flat>& v) {
        std::vector<std::vector<Point>> k;
        for (const Flat& f : v) k.push_back(f.sorted_points());
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

inline Collineation random_collineation(int n, std::mt19937& rng) {
    std::uniform_int_distribution<Mask> any(1, (Mask{1} << n) - 1);
    while (true) {
        std::vector<Mask> cols(static_cast<std::size_t>(n));
        for (auto& c : cols) c = any(rng);
        Gf2Matrix m(n, cols);
        if (rank(m) == n) return Collineation(m);
    }
}

/// Same design with flats and the points inside each flat permuted.
inline Spread shuffled(const Spread& s, std::mt19937& rng) {
    std::vector<Flat> flats;
    for (const Flat& f : s.flats()) {
        std::vector<Point> p = f.points();
        std::shuffle(p.begin(), p.end(), rng);
        flats.emplace_back(std::move(p));
    }
    std::shuffle(flats.begin(), flats.end(), rng);
    return Spread(s.u(), s.h(), std::move(flats));
}

inline Star shuffled(const Star& s, std::mt19937& rng) {
    std::vector<Flat> rays;
    for (const Flat& f : s.rays()) {
        std::vector<Point> p = f.points();
        std::shuffle(p.begin(), p.end(), rng);
        rays.emplace_back(std::move(p));
    }
    std::shuffle(rays.begin(), rays.end(), rng);
    return Star(s.n(), s.t(), s.t0(), std::move(rays));
}

}  // namespace pgiso::test
