#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "kkw/scalar_poly.hpp"

using namespace kkw;
using GR = GaussianRational;

namespace {

std::mt19937 rng(20240u);

GR random_gr() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return GR::make(num(rng), den(rng), num(rng), den(rng));
}

ScalarPoly random_poly() {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3);
    ScalarPoly p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Expo ex;
        for (int s = 0; s < 4; ++s) ex.e[s] = expo(rng) % 3;
        p.add_term(ex, random_gr());
    }
    return p;
}

} // namespace

TEST_CASE("Gaussian rational arithmetic") {
    SECTION("conjugate product") {
        GR a = GR::make(1, 2, 1, 1);
        REQUIRE(a * a.conj() == GR::frac(5, 4));
    }
    SECTION("i squares to -1") { REQUIRE(GR::i() * GR::i() == GR(-1)); }
    SECTION("division inverts multiplication") {
        for (int k = 0; k < 50; ++k) {
            GR a = random_gr(), b = random_gr();
            if (b.is_zero()) continue;
            REQUIRE((a * b) / b == a);
        }
    }
    SECTION("integer powers") {
        REQUIRE(GR::frac(1, 2).pow(3) == GR::frac(1, 8));
        REQUIRE((GR(0) - GR::i()).pow(2) == GR(-1));
        REQUIRE(GR(7).pow(0) == GR(1));
    }
    SECTION("rendering") {
        REQUIRE(GR::frac(3, 4).str() == "3/4");
        REQUIRE((GR(0) - GR::i()).str() == "-i");
        REQUIRE(GR::make(1, 2, 3, 1).str() == "(1/2+3*i)");
        REQUIRE(GR().str() == "0");
    }
}

TEST_CASE("ScalarPoly ring axioms (randomized)") {
    for (int k = 0; k < 200; ++k) {
        ScalarPoly a = random_poly(), b = random_poly(), c = random_poly();
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == ScalarPoly());
        REQUIRE(a * ScalarPoly(1) == a);
        REQUIRE(a * ScalarPoly() == ScalarPoly());
    }
}

TEST_CASE("ScalarPoly canonical form") {
    ScalarPoly p;
    Expo ex;
    ex[Sym::kappa] = 2;
    p.add_term(ex, GR(3));
    p.add_term(ex, GR(-3));
    REQUIRE(p.is_zero());
    REQUIRE(p == ScalarPoly());
}

TEST_CASE("ScalarPoly substitution") {
    ScalarPoly p = ScalarPoly::kappa() * ScalarPoly::u() * ScalarPoly::u() + ScalarPoly::f0();
    ScalarPoly q = p.subst_u1();
    REQUIRE(q == ScalarPoly::kappa() + ScalarPoly::f0());
    REQUIRE(!q.depends_on(Sym::u));
    REQUIRE(p.subst({{Sym::kappa, GR(2)}, {Sym::u, GR(3)}, {Sym::f0, GR(1)}}) ==
            ScalarPoly(GR(19)));
}

TEST_CASE("normal-derivative rules on the formal constants") {
    SECTION("u^m picks up m*kappa") {
        ScalarPoly u2 = ScalarPoly::u() * ScalarPoly::u();
        REQUIRE(u2.derivative_xn() == ScalarPoly(GR(2)) * ScalarPoly::kappa() * u2);
    }
    SECTION("f0 differentiates to f1") {
        REQUIRE(ScalarPoly::f0().derivative_xn() == ScalarPoly::f1());
    }
    SECTION("kappa and f1 are constants") {
        REQUIRE(ScalarPoly::kappa().derivative_xn().is_zero());
        REQUIRE(ScalarPoly::f1().derivative_xn().is_zero());
    }
    SECTION("Leibniz rule (randomized)") {
        for (int k = 0; k < 100; ++k) {
            ScalarPoly a = random_poly(), b = random_poly();
            REQUIRE((a * b).derivative_xn() ==
                    a.derivative_xn() * b + a * b.derivative_xn());
        }
    }
}

TEST_CASE("numeric evaluation agrees with exact substitution") {
    SymValues v{0.3, 1.0, 0.7, -1.1};
    for (int k = 0; k < 50; ++k) {
        ScalarPoly p = random_poly();
        ScalarPoly exact = p.subst({{Sym::kappa, GR::frac(3, 10)},
                                    {Sym::u, GR(1)},
                                    {Sym::f0, GR::frac(7, 10)},
                                    {Sym::f1, GR::frac(-11, 10)}});
        auto c = exact.as_constant();
        REQUIRE(c.has_value());
        REQUIRE(std::abs(p.eval(v) - c->to_complex()) < 1e-12);
    }
}
