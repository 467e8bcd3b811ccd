#ifndef JPN_PEIRCE_HPP
#define JPN_PEIRCE_HPP

// Peirce decomposition with respect to a family of pairwise orthogonal
// idempotents e_1..e_n summing to the unit:
//
//   A_ii = { x : e_i x = x },   A_ij = { x : e_i x = x/2, e_j x = x/2 }
//
// and the multiplication rules they obey,
//
//   A_ij A_ij <= A_ii + A_jj,   A_ij A_jk <= A_ik,
//   A_ij A_kl = 0 when {i,j} and {k,l} are disjoint.           (*)

#include "graded.hpp"
#include "homs.hpp"
#include "linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace jpn {

struct PeirceComponent {
    std::size_t i, j; // i <= j; i == j for diagonal components
    Mat rows;         // basis of the component, dense over alg's basis
};

struct PeirceDecomp {
    std::vector<std::size_t> idem; // basis indices of e_1..e_n
    std::vector<PeirceComponent> comps;

    const PeirceComponent& at(std::size_t i, std::size_t j) const {
        for (auto& c : comps)
            if ((c.i == i && c.j == j) || (c.i == j && c.j == i)) return c;
        throw std::out_of_range("no such Peirce component");
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (auto& c : comps) s += c.rows.size();
        return s;
    }
};

// left-multiplication matrix of basis element b (rows = inputs)
inline Mat left_mult(const Algebra<Rat>& alg, std::size_t b) {
    Mat m(alg.dim(), Vec(alg.dim(), Rat(0)));
    for (std::size_t x = 0; x < alg.dim(); ++x)
        for (auto& t : alg.product(b, x)) m[x][t.k] = t.c;
    return m;
}

// Solves the simultaneous eigenvalue conditions by one stacked nullspace.
inline PeirceDecomp peirce_decompose(const Algebra<Rat>& alg,
                                     const std::vector<std::size_t>& idem) {
    const std::size_t dim = alg.dim();
    const std::size_t n = idem.size();
    std::vector<Mat> lm;
    for (auto e : idem) lm.push_back(left_mult(alg, e));

    PeirceDecomp out;
    out.idem = idem;
    auto component = [&](std::size_t i, std::size_t j) {
        // x L_k^T = lambda_k x for every k
        Mat stacked; // columns indexed by x-coordinates; rows = conditions
        for (std::size_t k = 0; k < n; ++k) {
            Rat lam = (k == i && k == j) ? Rat(1)
                      : (k == i || k == j) ? Rat(1, 2)
                                           : Rat(0);
            for (std::size_t c = 0; c < dim; ++c) {
                Vec row(dim, Rat(0));
                for (std::size_t x = 0; x < dim; ++x) row[x] = lm[k][x][c];
                row[c] -= lam;
                stacked.push_back(std::move(row));
            }
        }
        return nullspace(std::move(stacked));
    };
    for (std::size_t i = 0; i < n; ++i)
        out.comps.push_back({i, i, component(i, i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.comps.push_back({i, j, component(i, j)});
    return out;
}

// Verifies the multiplication rules (*) for every pair of components.
inline CheckReport check_peirce_relations(const Algebra<Rat>& alg,
                                          const PeirceDecomp& dec) {
    CheckReport rep;
    const std::size_t dim = alg.dim();
    auto target_span = [&](const PeirceComponent& a, const PeirceComponent& b) {
        Mat rows;
        auto add = [&](std::size_t i, std::size_t j) {
            for (auto& r : dec.at(i, j).rows) rows.push_back(r);
        };
        // count index multiplicities across the two index sets
        std::map<std::size_t, int> cnt;
        ++cnt[a.i]; if (a.j != a.i) ++cnt[a.j];
        ++cnt[b.i]; if (b.j != b.i) ++cnt[b.j];
        std::vector<std::size_t> shared, only_one;
        for (auto& [k, c] : cnt) (c == 2 ? shared : only_one).push_back(k);
        if (shared.empty()) return rows;                 // disjoint -> zero
        if (only_one.empty()) {
            // same index set: A_ii A_ii <= A_ii, A_ij A_ij <= A_ii + A_jj
            for (auto k : shared) add(k, k);
        } else if (only_one.size() == 1) {
            // A_ii A_ij <= A_ij
            add(shared[0], only_one[0]);
        } else {
            // A_ij A_jk <= A_ik
            add(only_one[0], only_one[1]);
        }
        return rows;
    };

    for (auto& a : dec.comps)
        for (auto& b : dec.comps) {
            Mat tgt = target_span(a, b);
            Mat red = tgt;
            rref(red);
            while (!red.empty() && red.back() == Vec(dim, Rat(0))) red.pop_back();
            for (std::size_t p = 0; p < a.rows.size(); ++p)
                for (std::size_t q = 0; q < b.rows.size(); ++q) {
                    ++rep.checked;
                    auto prod = alg.mul(to_sparse(a.rows[p]), to_sparse(b.rows[q]));
                    Vec dense = to_dense(prod, dim);
                    bool okay = red.empty() ? prod.empty() : in_span(red, dense);
                    if (!okay)
                        rep.record({a.i, a.j, b.i, b.j},
                                   "product escapes target component");
                }
        }
    return rep;
}

} // namespace jpn

#endif
