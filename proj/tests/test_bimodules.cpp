#include <catch2/catch_amalgamated.hpp>

#include <jpn/bimodule.hpp>
#include <jpn/homs.hpp>

using namespace jpn;

static const ModCase all_cases[] = {ModCase::Reg, ModCase::RegOp, ModCase::Pn,
                                    ModCase::PnOp};

TEST_CASE("extension shape: dimensions, parities, dead radical") {
    for (auto kind : all_cases) {
        auto ext = build_extension(kind, 3);
        auto& e = ext.alg;
        REQUIRE(e.dim() == 36);
        REQUIRE(ext.jdim == 18);

        std::size_t odd = 0;
        for (std::size_t k = 0; k < e.dim(); ++k) odd += e.parity(k);
        CHECK(odd == 18); // every case splits evenly

        for (auto m1 : ext.radical())
            for (auto m2 : ext.radical()) CHECK(e.product(m1, m2).empty());

        // J-block matches JP_3 exactly
        auto j = build_jp(3);
        for (std::size_t i = 0; i < 18; ++i)
            for (std::size_t k = 0; k < 18; ++k)
                CHECK(e.product(i, k) == j.product(i, k));
    }
}

TEST_CASE("opposite action carries the (-1)^|a| twist") {
    auto reg = build_extension(ModCase::Reg, 3);
    auto rop = build_extension(ModCase::RegOp, 3);
    auto& er = reg.alg;
    auto& eo = rop.alg;
    auto h1 = er.index("h_1");
    auto v1 = er.index("v_1");
    auto u1 = er.index("u_1");
    auto g1 = er.index("g_1");
    // h_1 . v_1 mirrors h_1 o u_1 = h_1: plain in Reg, negated in RegOp
    CHECK(er.product(h1, v1) == SparseVec<Rat>{{g1, Rat(1)}});
    CHECK(eo.product(h1, v1) == SparseVec<Rat>{{g1, Rat(-1)}});
    // even actors are untouched
    CHECK(er.product(u1, v1) == eo.product(u1, v1));
    // right action has no twist
    CHECK(er.product(v1, h1) == eo.product(v1, h1));
    // parities flipped on the radical only
    for (std::size_t k = 0; k < 18; ++k) CHECK(er.parity(k) == eo.parity(k));
    for (auto m : reg.radical()) CHECK(er.parity(m) == 1 - eo.parity(m));
}

TEST_CASE("all four split null extensions are Jordan superalgebras") {
    for (auto kind : all_cases) {
        auto ext = build_extension(kind, 3);
        CAPTURE(case_name(kind));
        CHECK(check_supercommutative(ext.alg).ok());
        auto rep = check_super_jordan(ext.alg);
        CHECK(rep.ok());
        CHECK(rep.checked == 36ull * 36 * 36 * 36);
    }
}

TEST_CASE("a single sign error in the action is detected") {
    auto ext = build_extension(ModCase::Pn, 3);
    auto& e = ext.alg;
    auto u1 = e.index("u_1");
    auto w12 = e.index("w_12");
    auto prod = e.product(u1, w12);
    REQUIRE_FALSE(prod.empty());
    prod[0].c = -prod[0].c;
    e.set_product(u1, w12, prod);
    auto rep = check_super_jordan(e);
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.samples.empty());
}

TEST_CASE("subalgebra closure of spans") {
    auto ext = build_extension(ModCase::Reg, 3);
    auto& e = ext.alg;
    const std::size_t dim = e.dim();

    auto row_of = [&](const std::string& name) {
        Vec v(dim, Rat(0));
        v[e.index(name)] = 1;
        return v;
    };

    // canonical J basis inside the extension is closed
    Mat jrows;
    for (std::size_t k = 0; k < ext.jdim; ++k) jrows.push_back(row_of(e.name(k)));
    CHECK(subalgebra_check(e, jrows).ok());

    // {u_1, h_1, s_12} is not: h_1 * s_12 = 1/2 u_21 escapes
    Mat bad = {row_of("u_1"), row_of("h_1"), row_of("s_12")};
    auto rep = subalgebra_check(e, bad);
    CHECK_FALSE(rep.ok());

    // the whole algebra is closed
    Mat full;
    for (std::size_t k = 0; k < dim; ++k) full.push_back(row_of(e.name(k)));
    CHECK(subalgebra_check(e, full).ok());
}

TEST_CASE("quotient by the radical recovers JP_3") {
    for (auto kind : all_cases) {
        auto ext = build_extension(kind, 3);
        Mat ideal;
        for (auto m : ext.radical()) {
            Vec v(ext.alg.dim(), Rat(0));
            v[m] = 1;
            ideal.push_back(v);
        }
        auto q = quotient(ext.alg, ideal);
        auto j = build_jp(3);
        REQUIRE(q.dim() == j.dim());
        Mat ident(j.dim(), Vec(j.dim(), Rat(0)));
        for (std::size_t k = 0; k < j.dim(); ++k) ident[k][k] = 1;
        CHECK(isomorphism_check(j, q, ident).ok());
    }
}

TEST_CASE("isomorphism checker rejects bad maps") {
    auto j = build_jp(3);
    Mat ident(j.dim(), Vec(j.dim(), Rat(0)));
    for (std::size_t k = 0; k < j.dim(); ++k) ident[k][k] = 1;
    CHECK(isomorphism_check(j, j, ident).ok());

    Mat scaled = ident;
    scaled[j.index("u_1")][j.index("u_1")] = 2; // u_1 -> 2u_1 is not multiplicative
    CHECK_FALSE(isomorphism_check(j, j, scaled).ok());

    Mat degenerate = ident;
    degenerate[1] = ident[0];
    CHECK_FALSE(isomorphism_check(j, j, degenerate).ok());

    Mat parity_mix = ident;
    parity_mix[j.index("h_1")][j.index("u_1")] = 1; // h_1 -> h_1 + u_1
    CHECK_FALSE(isomorphism_check(j, j, parity_mix).ok());
}
