#ifndef JPN_BIMODULE_HPP
#define JPN_BIMODULE_HPP

// The four irreducible JP_n-bimodules and their split null extensions.
//
// A bimodule M over J gives the algebra E = J + M where M*M = 0; M is a
// Jordan bimodule exactly when E satisfies the two superalgebra identities.
// The four modules handled here:
//
//   Reg    the regular bimodule (J acting on a copy of itself)
//   RegOp  its opposite (parities flipped; a.m^op = (-1)^|a| (a m)^op,
//          m^op.a = (m a)^op)
//   Pn     the skew space P_n under a o m inside M(n|n)
//   PnOp   its opposite
//
// Radical basis naming mirrors the algebra basis so products are easy to
// read: u,h,s -> v,g,z for the regular copies and a,b,c -> w,y,x for the
// P_n copies; opposite modules keep the names with parities flipped.

#include "graded.hpp"
#include "matrix_models.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jpn {

enum class ModCase { Reg, RegOp, Pn, PnOp };

inline const char* case_name(ModCase c) {
    switch (c) {
        case ModCase::Reg: return "reg";
        case ModCase::RegOp: return "regop";
        case ModCase::Pn: return "pn";
        case ModCase::PnOp: return "pnop";
    }
    return "?";
}

inline ModCase case_from_name(const std::string& s) {
    if (s == "reg") return ModCase::Reg;
    if (s == "regop") return ModCase::RegOp;
    if (s == "pn") return ModCase::Pn;
    if (s == "pnop") return ModCase::PnOp;
    throw std::invalid_argument("unknown case: " + s);
}

struct Extension {
    Algebra<Rat> alg;
    std::size_t jdim = 0; // basis [0, jdim) is the algebra part
    std::size_t n = 0;
    ModCase kind = ModCase::Reg;

    std::vector<std::size_t> radical() const {
        std::vector<std::size_t> out;
        for (std::size_t k = jdim; k < alg.dim(); ++k) out.push_back(k);
        return out;
    }
};

namespace detail {

inline std::string mirror_name(const std::string& s, bool reg) {
    // u->v h->g s->z  |  a->w b->y c->x
    char c = s[0];
    char m;
    if (reg) m = (c == 'u') ? 'v' : (c == 'h') ? 'g' : 'z';
    else m = (c == 'a') ? 'w' : (c == 'b') ? 'y' : 'x';
    return m + s.substr(1);
}

} // namespace detail

// Builds J + M with M*M = 0 from the matrix models.
inline Extension build_extension(ModCase kind, std::size_t n) {
    const bool reg = (kind == ModCase::Reg || kind == ModCase::RegOp);
    const bool op = (kind == ModCase::RegOp || kind == ModCase::PnOp);
    Algebra<Rat> j = build_jp(n);
    const std::size_t d = j.dim();

    std::vector<BasisElem> basis(j.basis());
    std::vector<BasisElem> mod_basis;
    if (reg) {
        for (auto& b : j.basis())
            mod_basis.push_back({detail::mirror_name(b.name, true), b.parity});
    } else {
        for (auto& b : p_model_basis(n))
            mod_basis.push_back({detail::mirror_name(b.name, false), b.parity});
    }
    for (auto& b : mod_basis)
        basis.push_back({b.name, op ? 1 - b.parity : b.parity});

    Extension ext{Algebra<Rat>(basis), d, n, kind};
    Algebra<Rat>& e = ext.alg;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) e.set_product(i, k, j.product(i, k));

    // module action tensors in module coordinates
    const std::size_t md = mod_basis.size();
    std::vector<std::vector<SparseVec<Rat>>> left(d, std::vector<SparseVec<Rat>>(md));
    std::vector<std::vector<SparseVec<Rat>>> right(md, std::vector<SparseVec<Rat>>(d));
    if (reg) {
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t m = 0; m < md; ++m) {
                left[a][m] = j.product(a, m);
                right[m][a] = j.product(m, a);
            }
    } else {
        auto jb = jp_model_basis(n);
        auto pb = p_model_basis(n);
        Coordinatizer co(pb);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t m = 0; m < md; ++m) {
                auto to_sparse = [](const Vec& c) {
                    SparseVec<Rat> t;
                    for (std::size_t k = 0; k < c.size(); ++k)
                        if (c[k] != 0) t.push_back({k, c[k]});
                    return t;
                };
                left[a][m] = to_sparse(co.coords(jordan_mul(jb[a].mat, pb[m].mat)));
                right[m][a] = to_sparse(co.coords(jordan_mul(pb[m].mat, jb[a].mat)));
            }
    }

    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t m = 0; m < md; ++m) {
            Rat ls = op ? Rat(sign_pow(j.parity(a))) : Rat(1);
            SparseVec<Rat> lv, rv;
            for (auto& t : left[a][m]) lv.push_back({d + t.k, ls * t.c});
            for (auto& t : right[m][a]) rv.push_back({d + t.k, t.c});
            e.set_product(a, d + m, std::move(lv));
            e.set_product(d + m, a, std::move(rv));
        }
    // radical squares to zero: entries already empty
    return ext;
}

} // namespace jpn

#endif
