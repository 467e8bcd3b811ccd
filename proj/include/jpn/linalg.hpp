#ifndef JPN_LINALG_HPP
#define JPN_LINALG_HPP

// Exact dense linear algebra over the rationals.  Everything here is plain
// Gauss-Jordan with leftmost-pivot selection; determinism matters more than
// speed (reports must be byte-stable across runs), and the systems we solve
// stay in the low thousands of rows.

#include "rational.hpp"

#include <optional>
#include <vector>

namespace jpn {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

// Solve A x = b.  Returns the particular solution with all free variables
// set to zero, or nullopt if inconsistent.
inline std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Mat aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

// Basis of the nullspace of A (columns = cols(A)).
inline std::vector<Vec> nullspace(Mat a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Is v in the row space of A?
inline bool in_span(const Mat& a, const Vec& v) {
    Mat m = a;
    std::size_t r0 = rank(m);
    m.push_back(v);
    return rank(std::move(m)) == r0;
}

// Do two row sets span the same subspace?
inline bool same_span(const Mat& a, const Mat& b) {
    Mat ra = a, rb = b;
    auto pa = rref(ra), pb = rref(rb);
    if (pa.size() != pb.size()) return false;
    ra.resize(pa.size());
    rb.resize(pb.size());
    return ra == rb;
}

} // namespace jpn

#endif
