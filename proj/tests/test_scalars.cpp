#include <catch2/catch_amalgamated.hpp>

#include <jpn/affine.hpp>
#include <jpn/linalg.hpp>
#include <jpn/rational.hpp>

using namespace jpn;

TEST_CASE("rationals are canonical and exact") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(-3, -6) == make_rat(1, 2));
    CHECK(rat_to_string(make_rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(make_rat(5)) == "5");
    CHECK(num_str(make_rat(-3, 6)) == "-1");
    CHECK(den_str(make_rat(-3, 6)) == "2");
    CHECK(rat_from_string("-7/3") == make_rat(-7, 3));
    CHECK(rat_from_string("42") == make_rat(42));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(make_rat(1, 0));

    // no drift under repeated arithmetic
    Rat x(1, 3);
    Rat acc(0);
    for (int i = 0; i < 300; ++i) acc += x;
    CHECK(acc == 100);
}

TEST_CASE("affine forms: ring laws on degree <= 1") {
    UnknownId eta12{"eta", {1, 2}, {}};
    UnknownId eta21{"eta", {2, 1}, {}};
    AffineForm a = AffineForm(make_rat(1, 2)) + AffineForm(2) * AffineForm(eta12);
    AffineForm b = AffineForm(make_rat(1, 2)) - AffineForm(2) * AffineForm(eta12);
    CHECK(a + b == AffineForm(1));
    CHECK((AffineForm(7) * AffineForm(eta12) - AffineForm(6) * AffineForm(eta12)) ==
          AffineForm(eta12));
    CHECK((a - a).is_zero());
    CHECK(a * AffineForm(0) == AffineForm(0));

    AffineForm u(eta12), v(eta21);
    CHECK(u + v == v + u);
    CHECK((u + v) + a == u + (v + a));
    CHECK(AffineForm(3) * (u + v) == AffineForm(3) * u + AffineForm(3) * v);
}

TEST_CASE("products of two unknowns are rejected") {
    AffineForm u(UnknownId{"eta", {1}, {}});
    AffineForm v(UnknownId{"lam", {1, 2}, {1}});
    CHECK_THROWS_AS(u * v, QuadraticTermError);
    CHECK_THROWS_AS(u * u, QuadraticTermError);
    CHECK_NOTHROW(u * AffineForm(make_rat(-1, 3)));
}

TEST_CASE("unknown naming and substitution") {
    UnknownId lam{"lam", {1, 2}, {1}};
    CHECK(lam.name() == "lam^1_12");
    AffineForm f = AffineForm(1) + AffineForm(2) * AffineForm(lam);
    auto g = f.substitute({{lam, make_rat(-1, 2)}});
    CHECK(g == AffineForm(0));
    CHECK(f.substitute({}) == f);
}

TEST_CASE("exact rref, solve, nullspace") {
    Mat a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}};
    CHECK(rank(a) == 2);

    Mat sq = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    auto x = solve_linear(sq, {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);

    Mat inconsistent = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_FALSE(solve_linear(inconsistent, {Rat(1), Rat(2)}).has_value());

    Mat n = {{Rat(1), Rat(2), Rat(3)}};
    auto ns = nullspace(n);
    REQUIRE(ns.size() == 2);
    for (auto& v : ns) CHECK(v[0] + Rat(2) * v[1] + Rat(3) * v[2] == 0);

    Mat s1 = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    Mat s2 = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    CHECK(same_span(s1, s2));
    CHECK(in_span(s2, {Rat(3), Rat(7)}));
    Mat line = {{Rat(1), Rat(1)}};
    CHECK_FALSE(same_span(s1, line));
    CHECK_FALSE(in_span(line, {Rat(1), Rat(2)}));
}
