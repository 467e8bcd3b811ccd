#include <catch2/catch_amalgamated.hpp>

#include <jpn/homs.hpp>
#include <jpn/wpt.hpp>

using namespace jpn;

namespace {

AffineForm U(std::string fam, std::vector<int> sub, std::vector<int> sup = {}) {
    return AffineForm::unknown({std::move(fam), std::move(sub), std::move(sup)});
}

const ConstraintSystem& reg_system() {
    static const ConstraintSystem cs = [] {
        auto sym = symbolic_lift(ModCase::Reg, 3);
        auto c = derive_constraints(sym);
        reduce_constraints(c);
        return c;
    }();
    return cs;
}

} // namespace

TEST_CASE("symbolic lift carries the full unknown parametrization") {
    auto sym = symbolic_lift(ModCase::Reg, 3);
    CHECK(sym.unknowns.size() == 99);
    // constants agree with the numeric extension everywhere
    auto ext = build_extension(ModCase::Reg, 3);
    for (std::size_t i = 0; i < sym.alg.dim(); ++i)
        for (std::size_t j = 0; j < sym.alg.dim(); ++j) {
            SparseVec<Rat> num;
            for (auto& t : sym.alg.product(i, j))
                if (t.c.constant() != 0) num.push_back({t.k, t.c.constant()});
            CHECK(num == ext.alg.product(i, j));
        }
    // unknown parts are radical-valued and appear on (J, J) entries only
    for (std::size_t i = 0; i < sym.alg.dim(); ++i)
        for (std::size_t j = 0; j < sym.alg.dim(); ++j)
            for (auto& t : sym.alg.product(i, j))
                if (!t.c.is_constant()) {
                    CHECK(i < sym.jdim);
                    CHECK(j < sym.jdim);
                    CHECK(t.k >= sym.jdim);
                }
}

TEST_CASE("a single quadruple already pins the diagonal eta") {
    auto sym = symbolic_lift(ModCase::Reg, 3);
    auto u1 = sym.alg.index("u_1");
    auto h1 = sym.alg.index("h_1");
    auto res = super_jordan_residual(sym.alg, u1, h1, u1, u1);
    // the residual is a rational multiple of eta_1 on its radical support
    bool pins = false;
    for (auto& t : res) {
        if (t.c.is_constant()) {
            CHECK(t.c.constant() == 0);
            continue;
        }
        REQUIRE(t.c.linear().size() == 1);
        CHECK(t.c.linear().begin()->first == UnknownId{"eta", {1}, {}});
        pins = true;
    }
    CHECK(pins);
}

TEST_CASE("exhaustive reduction, regular case: rank and free unknowns") {
    auto& cs = reg_system();
    REQUIRE(cs.consistent);
    CHECK(cs.unknowns.size() == 99);
    CHECK(cs.rank == 91);
    std::vector<UnknownId> expected = {
        {"lam", {1, 2}, {2}}, {"lam", {1, 3}, {3}}, {"lam", {2, 3}, {3}},
        {"eta", {1, 3}, {}},  {"eta", {2, 1}, {}},  {"eta", {2, 3}, {}},
        {"eta", {3, 1}, {}},  {"eta", {3, 2}, {}},
    };
    std::vector<UnknownId> got = cs.free_unknowns;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
}

TEST_CASE("the reduced system implies the lemma relations") {
    auto& cs = reg_system();
    int all[] = {1, 2, 3};
    for (int i : all) {
        CHECK(implies(cs, U("eta", {i})));
        for (int j : all) {
            if (j == i) continue;
            // eta_ji + 2 eta_iji = 0
            CHECK(implies(cs, U("eta", {j, i}) + 2 * U("eta", {i, j, i})));
            // diagonal xi-slot coefficients carry no z-part
            CHECK(implies(cs, U("alpha", {i, i, j})));
            CHECK(implies(cs, U("alpha", {i, j, i})));
            CHECK(implies(cs, U("gamma", {i, i, j})));
            // h_i . s_ij coefficient ties to the diagonal lambda of the pair
            if (i < j)
                CHECK(implies(cs, U("lam", {i, i, j}, {j, i}) -
                                      U("lam", {i, j}, {j}) - U("eta", {i, j, i})));
            for (int l : all) {
                if (l == i || l == j) continue;
                CHECK(implies(cs, U("eta", {i, j, i, l}) + U("eta", {j, i, j, l})));
                CHECK(implies(cs, 2 * U("eta", {i, l, i, j}) - U("eta", {i, j}) +
                                      U("eta", {l, j})));
                CHECK(implies(cs, U("beta", {i, j, j, l}) + U("beta", {j, i, i, l})));
                CHECK(implies(cs, U("beta", {i, j, j, l}) + U("beta", {j, l, l, i}) +
                                      U("beta", {l, i, i, j})));
                CHECK(implies(cs, U("lam", {i, j, j, l}, {i, l})));
            }
        }
    }
    // coherence around the 3-cycle is forced
    CHECK(implies(cs, U("eta", {1, 2}) - U("eta", {2, 1}) + U("eta", {2, 3}) -
                          U("eta", {3, 2}) + U("eta", {3, 1}) - U("eta", {1, 3})));
    // ... but no single off-diagonal eta is
    CHECK_FALSE(implies(cs, U("eta", {1, 2})));
}

TEST_CASE("gauge-fixing the diagonal lambdas leaves the xi family") {
    ConstraintSystem cs = reg_system();
    for (auto u : {UnknownId{"lam", {1, 2}, {2}}, UnknownId{"lam", {1, 3}, {3}},
                   UnknownId{"lam", {2, 3}, {3}}})
        cs.rows.push_back(cs.equation_row(AffineForm::unknown(u)));
    reduce_constraints(cs);
    REQUIRE(cs.consistent);
    CHECK(cs.rank == 94);
    for (auto& u : cs.free_unknowns) {
        CHECK(u.family == "eta");
        CHECK(u.sub.size() == 2);
    }
    // every pivot unknown is an affine function of the xi family alone
    for (auto& [u, expr] : cs.solved) {
        CHECK(expr.constant() == 0);
        for (auto& [v, c] : expr.linear()) {
            CHECK(v.family == "eta");
            CHECK(v.sub.size() == 2);
        }
    }
}

TEST_CASE("the other three cases reduce to the zero solution modulo gauge") {
    for (auto kind : {ModCase::RegOp, ModCase::Pn, ModCase::PnOp}) {
        CAPTURE(case_name(kind));
        auto sym = symbolic_lift(kind, 3);
        auto cs = derive_constraints(sym);
        reduce_constraints(cs);
        REQUIRE(cs.consistent);
        // zero always solves; the only freedom left (skew case Pn) is the
        // diagonal-lambda choice in the lifts
        for (auto& [u, expr] : cs.solved) CHECK(expr.constant() == 0);
        for (auto& u : cs.free_unknowns) {
            CHECK(u.family == "lam");
            CHECK(u.sub.size() == 2);
        }
        if (kind == ModCase::Pn) {
            CHECK(cs.rank == 96);
        } else {
            CHECK(cs.rank == 99);
            CHECK(cs.free_unknowns.empty());
        }
    }
}

TEST_CASE("seeded twists are deterministic and Jordan") {
    auto base = build_extension(ModCase::Pn, 3);
    auto a = shear_twist(base, 11);
    auto b = shear_twist(base, 11);
    CHECK(a.phi == b.phi);
    CHECK(shear_twist(base, 12).phi != a.phi);
    // seed 0 is the untwisted extension
    auto z = shear_twist(base, 0);
    for (std::size_t i = 0; i < 36; ++i)
        for (std::size_t j = 0; j < 36; ++j)
            CHECK(z.twisted.alg.product(i, j) == base.alg.product(i, j));
    // transported products satisfy the identities
    CHECK(check_supercommutative(a.twisted.alg).ok());
    CHECK(check_super_jordan(a.twisted.alg).ok());
}

TEST_CASE("solver round trip on sheared twists") {
    for (auto kind : {ModCase::Reg, ModCase::RegOp, ModCase::Pn, ModCase::PnOp}) {
        CAPTURE(case_name(kind));
        ComplementSolver solver(kind, 3);
        auto tw = shear_twist(solver.base(), 7);
        auto rows = solver.solve(tw.twisted);
        CHECK(verify_complement(tw.twisted, rows).ok());
        // untwisted input needs no corrections
        auto plain = shear_twist(solver.base(), 0);
        CHECK(solver.solve(plain.twisted) == naive_lift(solver.base()));
    }
}

TEST_CASE("an unliftable perturbation raises NoSolution") {
    ComplementSolver solver(ModCase::Reg, 3);
    Extension broken = solver.base();
    auto& e = broken.alg;
    auto u1 = e.index("u_1");
    auto u2 = e.index("u_2");
    auto v12 = e.index("v_12");
    auto p = e.product(u1, u2);
    p.push_back({v12, Rat(1)});
    e.set_product(u1, u2, p);
    e.set_product(u2, u1, p);
    CHECK_THROWS_AS(solver.solve(broken), NoSolution);
}

TEST_CASE("verify_complement rejects doctored rows") {
    ComplementSolver solver(ModCase::Reg, 3);
    auto tw = shear_twist(solver.base(), 3);
    auto rows = solver.solve(tw.twisted);
    REQUIRE(verify_complement(tw.twisted, rows).ok());
    auto& a = tw.twisted.alg;
    SECTION("parity-mixed correction") {
        rows[a.index("u_1")][a.index("g_1")] += 1;
        CHECK_FALSE(verify_complement(tw.twisted, rows).ok());
    }
    SECTION("broken closure") {
        rows[a.index("h_1")][a.index("g_1")] += 1;
        CHECK_FALSE(verify_complement(tw.twisted, rows).ok());
    }
    SECTION("dependent rows") {
        rows.pop_back();
        CHECK_FALSE(verify_complement(tw.twisted, rows).ok());
    }
}

TEST_CASE("measured xi matches the twist data") {
    auto base = build_extension(ModCase::Reg, 3);
    auto tw = xi_pattern_twist(base, 42);
    auto xi = measure_xi(tw.twisted);
    auto& a = base.alg;
    auto t_of = [&](std::size_t i, std::size_t j) { // unordered pair, 1-based
        std::string suf = "_" + std::to_string(std::min(i, j)) +
                          std::to_string(std::max(i, j));
        return tw.phi[a.index("h" + suf)][a.index("g" + suf)];
    };
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            if (i == j) continue;
            Rat t_j = tw.phi[a.index("h_" + std::to_string(j))]
                            [a.index("g_" + std::to_string(j))];
            CHECK(xi[i - 1][j - 1] == t_of(i, j) - t_j);
        }
}

TEST_CASE("constant xi: zero thetas and the predicted slot corrections") {
    auto base = build_extension(ModCase::Reg, 3);
    const Rat c(5, 3);
    Mat phi(base.jdim, Vec(base.alg.dim(), Rat(0)));
    auto& a = base.alg;
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j) {
            std::string suf = "_" + std::to_string(i) + std::to_string(j);
            phi[a.index("h" + suf)][a.index("g" + suf)] = c;
            phi[a.index("s" + suf)][a.index("z" + suf)] = -c;
        }
    auto tw = apply_twist(base, phi);
    auto xi = measure_xi(tw);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(xi[i][j] == (i == j ? Rat(0) : c));
    auto plan = case1_correction(xi, Rat(0), tw, naive_lift(base));
    CHECK(plan.theta == Vec(3, Rat(0)));
    Mat want = naive_lift(base);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = i + 1; j <= 3; ++j) {
            std::string suf = "_" + std::to_string(i) + std::to_string(j);
            want[a.index("h" + suf)][a.index("g" + suf)] = -c;
            want[a.index("s" + suf)][a.index("z" + suf)] = c;
        }
    CHECK(plan.rows == want);
    CHECK(verify_complement(tw, plan.rows).ok());
}

TEST_CASE("zero xi yields the naive lift back") {
    auto base = build_extension(ModCase::Reg, 3);
    auto tw = xi_pattern_twist(base, 0);
    auto plan = case1_correction(measure_xi(tw.twisted), Rat(0), tw.twisted,
                                 naive_lift(base));
    CHECK(plan.rows == naive_lift(base));
}

TEST_CASE("incoherent xi is rejected") {
    auto base = build_extension(ModCase::Reg, 3);
    Mat xi(3, Vec(3, Rat(0)));
    xi[0][1] = 1; // theta_1 - theta_3 would need two different values
    CHECK_THROWS_AS(case1_correction(xi, Rat(0), base, naive_lift(base)),
                    IncoherentXi);
}

TEST_CASE("theta_1 is a pure gauge freedom") {
    ComplementSolver solver(ModCase::Reg, 3);
    auto tw = xi_pattern_twist(solver.base(), 9);
    auto xi = measure_xi(tw.twisted);
    auto& a = tw.twisted.alg;
    Mat first;
    for (Rat theta1 : {Rat(0), Rat(1), Rat(-3, 2)}) {
        auto plan = case1_correction(xi, theta1, tw.twisted, naive_lift(solver.base()));
        CHECK(verify_complement(tw.twisted, plan.rows).ok());
        // the displayed product survives every gauge choice
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t j = i + 1; j <= 3; ++j) {
                std::string suf = "_" + std::to_string(i) + std::to_string(j);
                auto prod = tw.twisted.alg.mul(to_sparse(plan.rows[a.index("h" + suf)]),
                                               to_sparse(plan.rows[a.index("s" + suf)]));
                Vec got = to_dense(prod, a.dim());
                Vec want(a.dim(), Rat(0));
                for (std::size_t k = 0; k < want.size(); ++k) {
                    want[k] += plan.rows[a.index("u_" + std::to_string(j))][k] / 2;
                    want[k] -= plan.rows[a.index("u_" + std::to_string(i))][k] / 2;
                }
                CHECK(got == want);
            }
        // gauge-normalized rows agree across theta_1 choices
        if (first.empty()) first = gauge_normalize(tw.twisted, plan.rows);
        CHECK(gauge_normalize(tw.twisted, plan.rows) == first);
        // and the solver lands in the same coset of corrections
        CHECK(solver.canonicalize(plan.rows) == solver.solve(tw.twisted));
    }
}
