#ifndef JPN_GRADED_HPP
#define JPN_GRADED_HPP

// Z/2-graded algebras given by structure constants, and the two defining
// identity checks:
//
//   (1)  x y = (-1)^{|x||y|} y x
//   (2)  ((xy)z)t + (-1)^{|t|(|z|+|y|)+|z||y|} ((xt)z)y
//                 + (-1)^{|x|(|y|+|z|+|t|)+|t||z|} ((yt)z)x
//      = (xy)(zt) + (-1)^{|t||z|+|t||y|} (xt)(yz) + (-1)^{|y||z|} (xz)(yt)
//
// Both sides of (2) are multilinear, so verifying it on all homogeneous
// basis quadruples verifies it on the whole algebra.

#include "affine.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace jpn {

struct BasisElem {
    std::string name;
    int parity; // 0 even, 1 odd
};

template <class Coef>
struct Term {
    std::size_t k;
    Coef c;
    bool operator==(const Term&) const = default;
};

// Sparse vector sorted by basis index.
template <class Coef>
using SparseVec = std::vector<Term<Coef>>;

template <class Coef>
void axpy(SparseVec<Coef>& dst, const SparseVec<Coef>& src, const Coef& s) {
    if (src.empty()) return;
    SparseVec<Coef> out;
    out.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
        if (b == src.end() || (a != dst.end() && a->k < b->k)) {
            out.push_back(*a++);
        } else if (a == dst.end() || b->k < a->k) {
            Coef c = b->c * s;
            if (!(c == Coef(0))) out.push_back({b->k, std::move(c)});
            ++b;
        } else {
            Coef c = a->c + b->c * s;
            if (!(c == Coef(0))) out.push_back({a->k, std::move(c)});
            ++a; ++b;
        }
    }
    dst = std::move(out);
}

template <class Coef>
class Algebra {
public:
    Algebra() = default;
    explicit Algebra(std::vector<BasisElem> basis)
        : basis_(std::move(basis)), tab_(basis_.size() * basis_.size()) {}

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElem>& basis() const { return basis_; }
    int parity(std::size_t i) const { return basis_[i].parity; }
    const std::string& name(std::size_t i) const { return basis_[i].name; }

    std::size_t index(const std::string& name) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].name == name) return i;
        throw std::out_of_range("no basis element named " + name);
    }

    void set_product(std::size_t i, std::size_t j, SparseVec<Coef> v) {
        tab_[i * dim() + j] = std::move(v);
    }
    void add_to_product(std::size_t i, std::size_t j, std::size_t k, const Coef& c) {
        SparseVec<Coef> one{{k, c}};
        axpy(tab_[i * dim() + j], one, Coef(1));
    }
    const SparseVec<Coef>& product(std::size_t i, std::size_t j) const {
        return tab_[i * dim() + j];
    }

    SparseVec<Coef> mul(const SparseVec<Coef>& x, const SparseVec<Coef>& y) const {
        SparseVec<Coef> out;
        for (const auto& tx : x)
            for (const auto& ty : y) {
                // look before multiplying coefficients: with AffineForm
                // coefficients, a dead table entry must not trip the
                // quadratic-term guard
                const auto& p = product(tx.k, ty.k);
                if (p.empty()) continue;
                axpy(out, p, Coef(tx.c * ty.c));
            }
        return out;
    }

private:
    std::vector<BasisElem> basis_;
    std::vector<SparseVec<Coef>> tab_;
};

inline int sign_pow(int e) { return (e & 1) ? -1 : 1; }

struct Violation {
    std::vector<std::size_t> idx; // basis indices of the failing tuple
    std::string detail;
};

struct CheckReport {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<Violation> samples; // first few only
    bool ok() const { return violations == 0; }

    void record(std::vector<std::size_t> idx, std::string detail,
                std::size_t keep = 10) {
        ++violations;
        if (samples.size() < keep)
            samples.push_back({std::move(idx), std::move(detail)});
    }
};

template <class Coef>
std::string sparse_str(const Algebra<Coef>& a, const SparseVec<Coef>& v);

template <>
inline std::string sparse_str<Rat>(const Algebra<Rat>& a, const SparseVec<Rat>& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& t : v) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(t.c) + "*" + a.name(t.k);
    }
    return s;
}

template <>
inline std::string sparse_str<AffineForm>(const Algebra<AffineForm>& a,
                                          const SparseVec<AffineForm>& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& t : v) {
        if (!s.empty()) s += " + ";
        s += "(" + t.c.str() + ")*" + a.name(t.k);
    }
    return s;
}

template <class Coef>
CheckReport check_supercommutative(const Algebra<Coef>& alg) {
    CheckReport rep;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ++rep.checked;
            SparseVec<Coef> diff = alg.product(i, j);
            Coef s(-sign_pow(alg.parity(i) * alg.parity(j)));
            axpy(diff, alg.product(j, i), s);
            if (!diff.empty())
                rep.record({i, j}, alg.name(i) + "*" + alg.name(j) +
                                       " residual " + sparse_str(alg, diff));
        }
    }
    return rep;
}

// Residual of identity (2) on basis quadruple (x,y,z,t); empty iff it holds.
template <class Coef>
SparseVec<Coef> super_jordan_residual(const Algebra<Coef>& alg, std::size_t x,
                                      std::size_t y, std::size_t z, std::size_t t) {
    const int px = alg.parity(x), py = alg.parity(y), pz = alg.parity(z),
              pt = alg.parity(t);
    const auto& xy = alg.product(x, y);
    const auto& xt = alg.product(x, t);
    const auto& yt = alg.product(y, t);
    const auto& xz = alg.product(x, z);
    const auto& zt = alg.product(z, t);
    const auto& yz = alg.product(y, z);

    SparseVec<Coef> res;
    SparseVec<Coef> bz{{z, Coef(1)}};
    SparseVec<Coef> by{{y, Coef(1)}};
    SparseVec<Coef> bx{{x, Coef(1)}};
    SparseVec<Coef> bt{{t, Coef(1)}};
    axpy(res, alg.mul(alg.mul(xy, bz), bt), Coef(1));
    axpy(res, alg.mul(alg.mul(xt, bz), by),
         Coef(sign_pow(pt * (pz + py) + pz * py)));
    axpy(res, alg.mul(alg.mul(yt, bz), bx),
         Coef(sign_pow(px * (py + pz + pt) + pt * pz)));
    axpy(res, alg.mul(xy, zt), Coef(-1));
    axpy(res, alg.mul(xt, yz), Coef(-sign_pow(pt * pz + pt * py)));
    axpy(res, alg.mul(xz, yt), Coef(-sign_pow(py * pz)));
    return res;
}

// Full identity sweep over all dim^4 basis quadruples, split across threads.
// Violation samples are gathered deterministically (lowest quadruples first).
template <class Coef>
CheckReport check_super_jordan(const Algebra<Coef>& alg,
                               unsigned threads = std::thread::hardware_concurrency()) {
    const std::size_t n = alg.dim();
    if (threads == 0) threads = 1;
    if (threads > n) threads = static_cast<unsigned>(n ? n : 1);
    std::vector<CheckReport> parts(threads);

    auto work = [&](unsigned w) {
        CheckReport& rep = parts[w];
        for (std::size_t x = w; x < n; x += threads)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t t = 0; t < n; ++t) {
                        ++rep.checked;
                        auto res = super_jordan_residual(alg, x, y, z, t);
                        if (!res.empty())
                            rep.record({x, y, z, t},
                                       "(" + alg.name(x) + "," + alg.name(y) + "," +
                                           alg.name(z) + "," + alg.name(t) +
                                           ") residual " + sparse_str(alg, res));
                    }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();

    CheckReport rep;
    // merge in x order so sample selection is stable
    std::vector<std::vector<Violation>> buckets(threads);
    for (unsigned w = 0; w < threads; ++w) {
        rep.checked += parts[w].checked;
        rep.violations += parts[w].violations;
        buckets[w] = std::move(parts[w].samples);
    }
    std::vector<Violation> all;
    for (auto& b : buckets)
        for (auto& v : b) all.push_back(std::move(v));
    std::sort(all.begin(), all.end(),
              [](const Violation& a, const Violation& b) { return a.idx < b.idx; });
    if (all.size() > 10) all.resize(10);
    rep.samples = std::move(all);
    return rep;
}

} // namespace jpn

#endif
