#include "pgiso/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "pgiso/error.hpp"

namespace pgiso {

Point::Point(Mask bits) : bits_(bits) {
    if (bits == 0) throw Error("the null effect is not a point");
}

int min_dimension(Point p) noexcept { return std::bit_width(p.mask()); }

std::size_t yates_index(Point p) noexcept { return p.mask(); }

Point point_from_index(std::size_t index, int n) {
    if (n < 1 || n > 31) throw Error("dimension out of range");
    if (index < 1 || index >= (std::size_t{1} << n))
        throw Error("Yates index " + std::to_string(index) + " outside [1, 2^" + std::to_string(n) + "-1]");
    return Point(static_cast<Mask>(index));
}

std::string to_label(Point p) {
    std::string out;
    for (int i = 0; i < 32; ++i)
        if ((p.mask() >> i) & 1U) out.push_back(static_cast<char>('A' + i));
    return out;
}

Point parse_label(std::string_view text, int n) {
    if (text.empty()) throw Error("empty effect label");
    if (n > kMaxFactors) throw Error("letter labels support at most 15 factors");
    Mask bits = 0;
    for (char c : text) {
        if (c < 'A' || c > 'Z') throw Error("bad character in effect label '" + std::string(text) + "'");
        int i = c - 'A';
        if (i >= n)
            throw Error("factor " + std::string(1, c) + " exceeds n=" + std::to_string(n) + " in '" +
                        std::string(text) + "'");
        if ((bits >> i) & 1U) throw Error("repeated factor in effect label '" + std::string(text) + "'");
        bits |= Mask{1} << i;
    }
    return Point(bits);
}

std::vector<Point> span(std::span<const Point> generators) {
    if (generators.empty()) throw Error("empty generator set");
    std::vector<Point> out;
    auto present = [&](Mask m) {
        return std::any_of(out.begin(), out.end(), [m](Point q) { return q.mask() == m; });
    };
    for (Point g : generators) {
        if (present(g.mask())) continue;
        const std::size_t before = out.size();
        out.push_back(g);
        for (std::size_t i = 0; i < before; ++i) out.emplace_back(out[i].mask() ^ g.mask());
    }
    return out;
}

Mask Gf2Basis::reduce(Mask v) const noexcept {
    while (v != 0) {
        int b = std::bit_width(v) - 1;
        if (pivot_[b] == 0) break;
        v ^= pivot_[b];
    }
    return v;
}

bool Gf2Basis::insert(Mask v) noexcept {
    v = reduce(v);
    if (v == 0) return false;
    pivot_[std::bit_width(v) - 1] = v;
    ++rank_;
    return true;
}

bool Gf2Basis::contains(Mask v) const noexcept { return reduce(v) == 0; }

int rank(std::span<const Mask> vectors) {
    Gf2Basis basis;
    for (Mask v : vectors) basis.insert(v);
    return basis.rank();
}

int rank(std::span<const Point> points) {
    Gf2Basis basis;
    for (Point p : points) basis.insert(p.mask());
    return basis.rank();
}

Gf2Matrix::Gf2Matrix(int n, std::vector<Mask> columns) : n_(n), cols_(std::move(columns)) {
    if (n < 0 || n > 31) throw Error("matrix size out of range");
    if (cols_.size() != static_cast<std::size_t>(n)) throw Error("column count does not match matrix size");
    const Mask limit = n == 0 ? 0 : (Mask{1} << n) - 1;
    for (Mask c : cols_)
        if ((c & ~limit) != 0) throw Error("matrix column has entries beyond row n");
}

Gf2Matrix Gf2Matrix::identity(int n) {
    std::vector<Mask> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = Mask{1} << j;
    return Gf2Matrix(n, std::move(cols));
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Mask> cols(rows.size(), 0);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != n) throw Error("matrix is not square");
        for (int j = 0; j < n; ++j)
            if (row[static_cast<std::size_t>(j)] & 1) cols[static_cast<std::size_t>(j)] |= Mask{1} << i;
    }
    return Gf2Matrix(n, std::move(cols));
}

bool Gf2Matrix::entry(int row, int col) const { return (column(col) >> row) & 1U; }

Mask Gf2Matrix::apply(Mask v) const noexcept {
    Mask out = 0;
    for (int j = 0; v != 0 && j < n_; ++j, v >>= 1)
        if (v & 1U) out ^= cols_[static_cast<std::size_t>(j)];
    return out;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.n_ != b.n_) throw Error("matrix size mismatch");
    std::vector<Mask> cols(b.cols_.size());
    std::transform(b.cols_.begin(), b.cols_.end(), cols.begin(), [&](Mask c) { return a.apply(c); });
    return Gf2Matrix(a.n_, std::move(cols));
}

int rank(const Gf2Matrix& m) { return rank(std::span<const Mask>(m.columns())); }

Gf2Matrix invert(const Gf2Matrix& m) {
    const int n = m.size();
    // Row-major working copy: row i, bit j = entry (i, j); inv starts as the identity.
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0), inv(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (m.entry(i, j)) rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
        inv[static_cast<std::size_t>(i)] = Mask{1} << i;
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if ((rows[static_cast<std::size_t>(r)] >> c) & 1U) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("not a collineation");
        std::swap(rows[static_cast<std::size_t>(c)], rows[static_cast<std::size_t>(pivot)]);
        std::swap(inv[static_cast<std::size_t>(c)], inv[static_cast<std::size_t>(pivot)]);
        for (int r = 0; r < n; ++r) {
            if (r == c || !((rows[static_cast<std::size_t>(r)] >> c) & 1U)) continue;
            rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(c)];
            inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(c)];
        }
    }
    std::vector<Mask> cols(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((inv[static_cast<std::size_t>(i)] >> j) & 1U) cols[static_cast<std::size_t>(j)] |= Mask{1} << i;
    return Gf2Matrix(n, std::move(cols));
}

Gf2Matrix embed(const Gf2Matrix& m, int n) {
    if (n < m.size()) throw Error("cannot embed into a smaller geometry");
    std::vector<Mask> cols = m.columns();
    for (int j = m.size(); j < n; ++j) cols.push_back(Mask{1} << j);
    return Gf2Matrix(n, std::move(cols));
}

std::string to_grid(const Gf2Matrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << (m.entry(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

Collineation::Collineation(Gf2Matrix m) : m_(std::move(m)) {
    if (rank(m_) != m_.size()) throw Error("not a collineation");
}

Collineation Collineation::identity(int n) { return Collineation(Gf2Matrix::identity(n)); }

Collineation Collineation::inverse() const { return Collineation(invert(m_)); }

Collineation operator*(const Collineation& a, const Collineation& b) { return Collineation(a.m_ * b.m_); }

}  // namespace pgiso
