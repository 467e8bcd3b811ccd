#ifndef JPN_MATRIX_MODELS_HPP
#define JPN_MATRIX_MODELS_HPP

// Concrete matrix realizations.
//
// M(n|n) is the associative superalgebra of 2n x 2n matrices with the block
// grading: diagonal n x n blocks even, off-diagonal blocks odd.  On it,
//
//   [a b; c d]^trp = [d^t -b^t; c^t a^t]
//
// is a superinvolution.  Its fixed points under the supersymmetric product
//   a o b = 1/2 (ab + (-1)^{|a||b|} ba)
// form the Jordan superalgebra JP_n (dim 2n^2); the skew points form the
// space P_n, which is a JP_n-bimodule under the same product.
//
// Named bases (e_ij = unit matrices; e^n, e^{1n}, e^{n1} = the d, b, c
// blocks respectively):
//   JP_n:  u_ij = e_ij + e^n_ji      u_i = e_ii + e^n_ii      (even)
//          s_ij = e^{1n}_ij - e^{1n}_ji                        (odd, i<j)
//          h_ij = e^{n1}_ij + e^{n1}_ji      h_i = e^{n1}_ii   (odd, i<j)
//   P_n:   a_i = e_ii - e^n_ii       a_ij = e_ij - e^n_ji      (even)
//          b_i = e^{1n}_ii   b_ij = e^{1n}_ij + e^{1n}_ji      (odd, i<j)
//          c_ij = e^{n1}_ij - e^{n1}_ji                         (odd, i<j)
//
// Basis element names concatenate 1-based indices ("u_12"); n <= 9 keeps
// the names unambiguous, which covers everything this library targets.

#include "graded.hpp"
#include "linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jpn {

// Dense 2n x 2n rational matrix with the block Z/2-grading of M(n|n).
struct SuperMatrix {
    std::size_t n = 0;
    Mat m; // 2n x 2n

    explicit SuperMatrix(std::size_t n_) : n(n_), m(2 * n_, Vec(2 * n_, Rat(0))) {}

    Rat& at(std::size_t r, std::size_t c) { return m[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return m[r][c]; }

    bool is_zero() const {
        for (auto& row : m)
            for (auto& x : row)
                if (x != 0) return false;
        return true;
    }

    // parity of the block containing entry (r, c)
    int block_parity(std::size_t r, std::size_t c) const {
        return ((r < n) != (c < n)) ? 1 : 0;
    }

    // 0 or 1 if homogeneous, -1 if mixed (and nonzero in both parities)
    int parity() const {
        bool even = false, odd = false;
        for (std::size_t r = 0; r < 2 * n; ++r)
            for (std::size_t c = 0; c < 2 * n; ++c)
                if (m[r][c] != 0) (block_parity(r, c) ? odd : even) = true;
        if (even && odd) return -1;
        return odd ? 1 : 0;
    }

    friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;
};

inline SuperMatrix unit_mat(std::size_t n, std::size_t r, std::size_t c) {
    SuperMatrix e(n);
    e.at(r, c) = 1;
    return e;
}

inline SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) {
    for (std::size_t r = 0; r < 2 * a.n; ++r)
        for (std::size_t c = 0; c < 2 * a.n; ++c) a.m[r][c] += b.m[r][c];
    return a;
}

inline SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) {
    for (std::size_t r = 0; r < 2 * a.n; ++r)
        for (std::size_t c = 0; c < 2 * a.n; ++c) a.m[r][c] -= b.m[r][c];
    return a;
}

inline SuperMatrix operator*(const Rat& s, SuperMatrix a) {
    for (auto& row : a.m)
        for (auto& x : row) x *= s;
    return a;
}

// associative matrix product
inline SuperMatrix assoc_mul(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix out(a.n);
    const std::size_t d = 2 * a.n;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            if (a.m[r][k] == 0) continue;
            for (std::size_t c = 0; c < d; ++c)
                if (b.m[k][c] != 0) out.m[r][c] += a.m[r][k] * b.m[k][c];
        }
    return out;
}

// supersymmetric product of homogeneous matrices
inline SuperMatrix jordan_mul(const SuperMatrix& a, const SuperMatrix& b) {
    int pa = a.parity(), pb = b.parity();
    if (pa < 0 || pb < 0) throw std::invalid_argument("non-homogeneous operand");
    SuperMatrix ab = assoc_mul(a, b);
    SuperMatrix ba = assoc_mul(b, a);
    Rat half(1, 2);
    return (pa * pb) ? half * (ab - ba) : half * (ab + ba);
}

// the superinvolution [a b; c d] -> [d^t -b^t; c^t a^t]
inline SuperMatrix trp(const SuperMatrix& x) {
    const std::size_t n = x.n;
    SuperMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.at(i, j) = x.at(n + j, n + i);          // d^t
            out.at(i, n + j) = -x.at(j, n + i);         // -b^t
            out.at(n + i, j) = x.at(n + j, i);          // c^t
            out.at(n + i, n + j) = x.at(j, i);          // a^t
        }
    return out;
}

struct ModelElem {
    std::string name;
    int parity;
    SuperMatrix mat;
};

namespace detail {
inline std::string nm(const char* fam, std::size_t i) {
    return std::string(fam) + "_" + std::to_string(i + 1);
}
inline std::string nm(const char* fam, std::size_t i, std::size_t j) {
    return std::string(fam) + "_" + std::to_string(i + 1) + std::to_string(j + 1);
}
inline void require_small(std::size_t n, std::size_t lo) {
    if (n < lo || n > 9)
        throw std::invalid_argument("n out of supported range [" +
                                    std::to_string(lo) + ", 9]");
}
} // namespace detail

// e^{1n}_ij, e^{n1}_ij, e^n_ij as full matrices
inline SuperMatrix e_a(std::size_t n, std::size_t i, std::size_t j) { return unit_mat(n, i, j); }
inline SuperMatrix e_b(std::size_t n, std::size_t i, std::size_t j) { return unit_mat(n, i, n + j); }
inline SuperMatrix e_c(std::size_t n, std::size_t i, std::size_t j) { return unit_mat(n, n + i, j); }
inline SuperMatrix e_d(std::size_t n, std::size_t i, std::size_t j) { return unit_mat(n, n + i, n + j); }

// Named basis of JP_n.  Order: u_i, u_ij (i != j), then h_i, h_ij (i<j),
// s_ij (i<j); even part first.
inline std::vector<ModelElem> jp_model_basis(std::size_t n) {
    detail::require_small(n, 2);
    std::vector<ModelElem> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({detail::nm("u", i), 0, e_a(n, i, i) + e_d(n, i, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                out.push_back({detail::nm("u", i, j), 0, e_a(n, i, j) + e_d(n, j, i)});
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({detail::nm("h", i), 1, e_c(n, i, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back({detail::nm("h", i, j), 1, e_c(n, i, j) + e_c(n, j, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back({detail::nm("s", i, j), 1, e_b(n, i, j) - e_b(n, j, i)});
    return out;
}

// Named basis of P_n = {a : a^trp = -a}; same ordering conventions.
inline std::vector<ModelElem> p_model_basis(std::size_t n) {
    detail::require_small(n, 3);
    std::vector<ModelElem> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({detail::nm("a", i), 0, e_a(n, i, i) - e_d(n, i, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                out.push_back({detail::nm("a", i, j), 0, e_a(n, i, j) - e_d(n, j, i)});
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({detail::nm("b", i), 1, e_b(n, i, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back({detail::nm("b", i, j), 1, e_b(n, i, j) + e_b(n, j, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back({detail::nm("c", i, j), 1, e_c(n, i, j) - e_c(n, j, i)});
    return out;
}

// Expresses matrices in a given model basis by exact linear solves.
class Coordinatizer {
public:
    explicit Coordinatizer(const std::vector<ModelElem>& basis) {
        if (basis.empty()) throw std::invalid_argument("empty basis");
        n_ = basis[0].mat.n;
        const std::size_t flat = 4 * n_ * n_;
        bt_.assign(flat, Vec(basis.size(), Rat(0)));
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Vec f = flatten(basis[b].mat);
            for (std::size_t r = 0; r < flat; ++r) bt_[r][b] = f[r];
        }
        if (rank(bt_) != basis.size())
            throw std::invalid_argument("basis matrices are dependent");
    }

    // coefficients of x over the basis; throws if x is outside the span
    Vec coords(const SuperMatrix& x) const {
        auto sol = solve_linear(bt_, flatten(x));
        if (!sol) throw std::domain_error("matrix outside model span");
        return *sol;
    }

private:
    Vec flatten(const SuperMatrix& x) const {
        Vec out;
        out.reserve(4 * n_ * n_);
        for (auto& row : x.m)
            for (auto& v : row) out.push_back(v);
        return out;
    }
    std::size_t n_;
    Mat bt_;
};

// Structure constants of the supersymmetric product on the span of `basis`,
// re-coordinatized over that basis.  Throws if the span is not closed.
inline Algebra<Rat> algebra_from_model(const std::vector<ModelElem>& basis) {
    std::vector<BasisElem> names;
    names.reserve(basis.size());
    for (auto& b : basis) names.push_back({b.name, b.parity});
    Algebra<Rat> alg(std::move(names));
    Coordinatizer co(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Vec c = co.coords(jordan_mul(basis[i].mat, basis[j].mat));
            SparseVec<Rat> terms;
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0) terms.push_back({k, c[k]});
            alg.set_product(i, j, std::move(terms));
        }
    return alg;
}

inline Algebra<Rat> build_jp(std::size_t n) { return algebra_from_model(jp_model_basis(n)); }

// Action tensor of JP_n on P_n via a o m inside M(n|n).  Row indices are
// JP_n basis, columns P_n basis, values in P_n coordinates.
inline std::vector<std::vector<SparseVec<Rat>>> p_action(std::size_t n) {
    auto jb = jp_model_basis(n);
    auto pb = p_model_basis(n);
    Coordinatizer co(pb);
    std::vector<std::vector<SparseVec<Rat>>> act(jb.size(),
                                                 std::vector<SparseVec<Rat>>(pb.size()));
    for (std::size_t i = 0; i < jb.size(); ++i)
        for (std::size_t m = 0; m < pb.size(); ++m) {
            Vec c = co.coords(jordan_mul(jb[i].mat, pb[m].mat));
            SparseVec<Rat> terms;
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0) terms.push_back({k, c[k]});
            act[i][m] = std::move(terms);
        }
    return act;
}

} // namespace jpn

#endif
