#pragma once

// Points of PG(n-1,2) and GF(2) linear algebra on bitmasks.
//
// A point (factorial effect) is a nonzero length-n GF(2) vector stored as a
// bitmask: factor F_i (letter 'A' + i - 1) is bit i-1. The mask value is also
// the point's position in Yates order (A=1, B=2, AB=3, C=4, ...).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgiso {

using Mask = std::uint32_t;

/// Upper bound on n for letter labels and prime tables.
inline constexpr int kMaxFactors = 15;

class Point {
public:
    /// Throws pgiso::Error for the null effect.
    explicit Point(Mask bits);

    Mask mask() const noexcept { return bits_; }

    friend bool operator==(Point, Point) = default;
    friend auto operator<=>(Point, Point) = default;

private:
    Mask bits_;
};

/// Highest factor index used by the point (1-based), i.e. the smallest n it fits.
int min_dimension(Point p) noexcept;

std::size_t yates_index(Point p) noexcept;
Point point_from_index(std::size_t index, int n);

/// Effect label such as "BCD". Letters are always emitted in alphabetical order.
std::string to_label(Point p);

/// Accepts letters in any order; rejects repeats, lowercase, and letters beyond n.
Point parse_label(std::string_view text, int n);

/// All nonzero GF(2) combinations of the generators.
///
/// Output order is the closure order: each generator not already present is
/// appended, followed by its sums with every point collected so far. For
/// independent generators {D, BC} this yields D, BC, BCD.
std::vector<Point> span(std::span<const Point> generators);

int rank(std::span<const Mask> vectors);
int rank(std::span<const Point> points);

/// Incrementally maintained row-echelon basis of a GF(2) subspace.
class Gf2Basis {
public:
    /// Adds v if independent of the current basis; returns whether the rank grew.
    bool insert(Mask v) noexcept;
    bool contains(Mask v) const noexcept;
    int rank() const noexcept { return rank_; }

private:
    Mask reduce(Mask v) const noexcept;

    // pivot_[b] holds the basis vector whose leading bit is b, or 0.
    Mask pivot_[32] = {};
    int rank_ = 0;
};

/// Square GF(2) matrix stored by columns; column j is the image of F_{j+1}.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int n, std::vector<Mask> columns);

    static Gf2Matrix identity(int n);
    /// rows[i][j] is the entry in row i, column j.
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    int size() const noexcept { return n_; }
    const std::vector<Mask>& columns() const noexcept { return cols_; }
    Mask column(int j) const { return cols_.at(static_cast<std::size_t>(j)); }
    bool entry(int row, int col) const;

    Mask apply(Mask v) const noexcept;

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    int n_ = 0;
    std::vector<Mask> cols_;
};

int rank(const Gf2Matrix& m);

/// Throws pgiso::Error("not a collineation") for singular input.
Gf2Matrix invert(const Gf2Matrix& m);

/// Extends an u x u matrix to n x n by fixing F_{u+1}, ..., F_n.
Gf2Matrix embed(const Gf2Matrix& m, int n);

/// Row-wise 0/1 grid, one row per line.
std::string to_grid(const Gf2Matrix& m);

/// Full-rank Gf2Matrix: a relabelling of PG(n-1,2).
class Collineation {
public:
    /// Throws pgiso::Error("not a collineation") when m is singular.
    explicit Collineation(Gf2Matrix m);

    static Collineation identity(int n);

    int size() const noexcept { return m_.size(); }
    const Gf2Matrix& matrix() const noexcept { return m_; }

    Point operator()(Point p) const { return Point(m_.apply(p.mask())); }
    Collineation inverse() const;

    friend Collineation operator*(const Collineation& a, const Collineation& b);
    friend bool operator==(const Collineation&, const Collineation&) = default;

private:
    Gf2Matrix m_;
};

}  // namespace pgiso
