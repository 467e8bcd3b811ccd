#ifndef JPN_HOMS_HPP
#define JPN_HOMS_HPP

// Subspace/morphism utilities on rational algebras: closure of a span under
// the product, isomorphism verification, and quotients by an ideal.

#include "graded.hpp"
#include "linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jpn {

inline Vec to_dense(const SparseVec<Rat>& v, std::size_t dim) {
    Vec out(dim, Rat(0));
    for (auto& t : v) out[t.k] = t.c;
    return out;
}

inline SparseVec<Rat> to_sparse(const Vec& v) {
    SparseVec<Rat> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) out.push_back({k, v[k]});
    return out;
}

// Is span(rows) closed under the product of alg?  Reports the first few
// escaping pairs.
inline CheckReport subalgebra_check(const Algebra<Rat>& alg, const Mat& rows) {
    CheckReport rep;
    Mat red = rows;
    rref(red);
    while (!red.empty() && red.back() == Vec(alg.dim(), Rat(0))) red.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) {
            ++rep.checked;
            auto prod = alg.mul(to_sparse(rows[i]), to_sparse(rows[j]));
            if (!in_span(red, to_dense(prod, alg.dim())))
                rep.record({i, j}, "product of rows " + std::to_string(i) + "," +
                                       std::to_string(j) + " escapes the span");
        }
    return rep;
}

// Does the map sending basis k of `a` to images[k] define an isomorphism of
// graded algebras a -> b?
inline CheckReport isomorphism_check(const Algebra<Rat>& a, const Algebra<Rat>& b,
                                     const Mat& images) {
    CheckReport rep;
    if (images.size() != a.dim() || a.dim() != b.dim()) {
        rep.record({}, "dimension mismatch");
        return rep;
    }
    ++rep.checked;
    if (rank(images) != a.dim()) rep.record({}, "images are linearly dependent");
    for (std::size_t k = 0; k < a.dim(); ++k) {
        ++rep.checked;
        for (std::size_t c = 0; c < b.dim(); ++c)
            if (images[k][c] != 0 && b.parity(c) != a.parity(k)) {
                rep.record({k}, "image of " + a.name(k) + " is not parity-homogeneous");
                break;
            }
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            ++rep.checked;
            auto lhs = b.mul(to_sparse(images[i]), to_sparse(images[j]));
            SparseVec<Rat> rhs;
            for (auto& t : a.product(i, j)) axpy(rhs, to_sparse(images[t.k]), t.c);
            SparseVec<Rat> diff = lhs;
            axpy(diff, rhs, Rat(-1));
            if (!diff.empty())
                rep.record({i, j}, "f(" + a.name(i) + "*" + a.name(j) +
                                       ") != f(" + a.name(i) + ")*f(" + a.name(j) + ")");
        }
    return rep;
}

// Quotient of alg by the ideal spanned by `ideal_rows`.  The complement
// basis is the lexicographically first subset of the standard basis that
// completes the ideal; returned algebra carries those basis names.
inline Algebra<Rat> quotient(const Algebra<Rat>& alg, const Mat& ideal_rows) {
    const std::size_t dim = alg.dim();
    Mat ideal = ideal_rows;
    auto piv = rref(ideal);
    ideal.resize(piv.size());

    // standard basis vectors not reachable: grow the span greedily
    std::vector<std::size_t> comp;
    Mat span = ideal;
    for (std::size_t k = 0; k < dim && span.size() < dim; ++k) {
        Vec ek(dim, Rat(0));
        ek[k] = 1;
        if (!in_span(span, ek)) {
            comp.push_back(k);
            span.push_back(ek);
        }
    }

    // projection: solve [ideal^T | comp^T] x = v, keep comp coordinates
    Mat bt(dim, Vec(ideal.size() + comp.size(), Rat(0)));
    for (std::size_t c = 0; c < ideal.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) bt[r][c] = ideal[c][r];
    for (std::size_t c = 0; c < comp.size(); ++c) bt[comp[c]][ideal.size() + c] = 1;
    auto project = [&](const SparseVec<Rat>& v) {
        auto sol = solve_linear(bt, to_dense(v, dim));
        if (!sol) throw std::domain_error("projection failed (not an ideal?)");
        SparseVec<Rat> out;
        for (std::size_t c = 0; c < comp.size(); ++c)
            if ((*sol)[ideal.size() + c] != 0) out.push_back({c, (*sol)[ideal.size() + c]});
        return out;
    };

    std::vector<BasisElem> names;
    for (auto k : comp) names.push_back(alg.basis()[k]);
    Algebra<Rat> q(names);
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j)
            q.set_product(i, j, project(alg.product(comp[i], comp[j])));
    return q;
}

} // namespace jpn

#endif
