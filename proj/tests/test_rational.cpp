#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "kkw/pole_rational.hpp"

using namespace kkw;
using GR = GaussianRational;

namespace {

const CliffordElement A = CliffordElement::A();
const CliffordElement B = CliffordElement::B();
const GR I = GR::i();

PoleRational one_over(int a, int b) { return {NumPoly{CliffordElement::one()}, a, b}; }

// c(xi) = A + xi*B as a polynomial numerator
PoleRational c_xi() {
    NumPoly n(2);
    n[0] = A;
    n[1] = B;
    return {std::move(n), 0, 0};
}

std::mt19937 rng(4242u);

PoleRational random_proper(bool scalar = true) {
    std::uniform_int_distribution<int> pole(0, 3);
    std::uniform_int_distribution<long> coeff(-6, 6);
    int a = pole(rng), b = pole(rng);
    if (a + b == 0) a = 1;
    int deg = std::uniform_int_distribution<int>(0, a + b - 1)(rng);
    NumPoly num(static_cast<size_t>(deg) + 1);
    for (auto& c : num) {
        if (scalar) {
            c = CliffordElement(GR::make(coeff(rng), 1, coeff(rng), 1));
        } else {
            c = A.scaled(GR(coeff(rng))) + B.scaled(GR(coeff(rng))) +
                CliffordElement(GR(coeff(rng)));
        }
    }
    return {std::move(num), a, b};
}

} // namespace

TEST_CASE("arithmetic golden examples") {
    SECTION("sum of simple poles") {
        PoleRational s = one_over(1, 0) + one_over(0, 1);
        NumPoly want(2);
        want[1] = CliffordElement(GR(2));
        REQUIRE(s == PoleRational(std::move(want), 1, 1));
    }
    SECTION("c(xi) squares to -(u + xi^2)") {
        PoleRational sq = c_xi() * c_xi();
        NumPoly want(3);
        want[0] = CliffordElement(-ScalarPoly::u());
        want[2] = CliffordElement(GR(-1));
        REQUIRE(sq == PoleRational(std::move(want), 0, 0));
    }
    SECTION("leading symbol times its conjugate") {
        PoleRational s = c_xi().scaled(I) * one_over(1, 1);
        PoleRational t = c_xi().scaled(GR(0) - I) * one_over(1, 1);
        REQUIRE((s * t).subst_u1() == -one_over(1, 1));
    }
}

TEST_CASE("reduction keeps the representation canonical") {
    // (xi - i) / ((xi-i)^2 (xi+i)) must reduce the +i pole order
    NumPoly n(2);
    n[0] = CliffordElement(GR(0) - I);
    n[1] = CliffordElement::one();
    PoleRational r(std::move(n), 2, 1);
    REQUIRE(r.pole_plus() == 1);
    REQUIRE(r.pole_minus() == 1);
}

TEST_CASE("xi-derivative golden examples") {
    // s = i*(A + xi B)/(1+xi^2)^2
    PoleRational s = c_xi().scaled(I) * one_over(2, 2);
    SECTION("second derivative") {
        NumPoly want(4);
        want[0] = A.scaled(GR(-4) * I);
        want[1] = B.scaled(GR(-12) * I);
        want[2] = A.scaled(GR(20) * I);
        want[3] = B.scaled(GR(12) * I);
        REQUIRE(s.diff_xi(2) == PoleRational(std::move(want), 4, 4));
    }
    SECTION("first derivative") {
        NumPoly want(3);
        want[0] = B.scaled(I);
        want[1] = A.scaled(GR(-4) * I);
        want[2] = B.scaled(GR(-3) * I);
        REQUIRE(s.diff_xi() == PoleRational(std::move(want), 3, 3));
    }
    SECTION("scalar example") {
        NumPoly want(2);
        want[1] = CliffordElement(GR(-2));
        REQUIRE(one_over(1, 1).diff_xi() == PoleRational(std::move(want), 2, 2));
    }
}

TEST_CASE("partial fractions") {
    SECTION("simple pole pair") {
        PartialFractions pf = one_over(1, 1).partial_fractions();
        REQUIRE(pf.poly_part.empty());
        REQUIRE(pf.plus.size() == 1);
        REQUIRE(pf.minus.size() == 1);
        REQUIRE(pf.plus[0] == CliffordElement(GR(1) / (GR(2) * I)));
        REQUIRE(pf.minus[0] == CliffordElement(GR(-1) / (GR(2) * I)));
    }
    SECTION("polynomial input passes through") {
        PartialFractions pf = PoleRational::xi().partial_fractions();
        REQUIRE(pf.plus.empty());
        REQUIRE(pf.minus.empty());
        REQUIRE(PoleRational(pf.poly_part, 0, 0) == PoleRational::xi());
    }
    SECTION("recombination, 500 random proper inputs") {
        for (int k = 0; k < 500; ++k) {
            PoleRational r = random_proper(k % 2 == 0);
            REQUIRE(r.partial_fractions().recombine() == r);
        }
    }
    SECTION("derivative commutes with decomposition") {
        for (int k = 0; k < 100; ++k) {
            PoleRational r = random_proper();
            REQUIRE(r.partial_fractions().recombine().diff_xi() ==
                    r.diff_xi().partial_fractions().recombine());
        }
    }
}

TEST_CASE("pi projections") {
    SECTION("golden: scalar kernel") {
        PoleRational want = one_over(1, 0).scaled(GR(0) - GR::frac(1, 2) * I);
        REQUIRE(one_over(1, 1).pi_plus() == want);
    }
    SECTION("golden: leading symbol at u=1") {
        PoleRational s = c_xi().scaled(I) * one_over(1, 1);
        PoleRational want =
            PoleRational(NumPoly{(A + B.scaled(I)).scaled(GR::frac(1, 2))}, 1, 0);
        REQUIRE(s.pi_plus().subst_u1() == want);
    }
    SECTION("no pole upstairs gives zero") {
        REQUIRE(one_over(0, 1).pi_plus().is_zero());
        REQUIRE(one_over(1, 0).pi_minus().is_zero());
    }
    SECTION("projector algebra, 500 random proper inputs") {
        for (int k = 0; k < 500; ++k) {
            PoleRational r = random_proper(k % 2 == 0);
            PoleRational p = r.pi_plus(), m = r.pi_minus();
            REQUIRE(p + m == r);
            REQUIRE(p.pi_plus() == p);
            REQUIRE(m.pi_minus() == m);
            REQUIRE(p.pi_minus().is_zero());
            REQUIRE(m.pi_plus().is_zero());
        }
    }
    SECTION("improper input is rejected") {
        REQUIRE_THROWS_AS(PoleRational::xi().pi_plus(), ImproperRational);
        NumPoly n(3);
        n[2] = CliffordElement::one();
        REQUIRE_THROWS_AS(PoleRational(std::move(n), 1, 1).pi_plus(), ImproperRational);
    }
}

TEST_CASE("line integration") {
    SECTION("arctangent kernel") {
        LineIntegral li = one_over(1, 1).integrate_line();
        REQUIRE(li.pi_owed);
        REQUIRE(li.coeff == CliffordElement::one());
    }
    SECTION("golden: odd-dimensional integrand") {
        NumPoly n(2);
        n[0] = CliffordElement(GR(2) * I);
        n[1] = CliffordElement(GR(-6));
        LineIntegral li = PoleRational(std::move(n), 3, 3).integrate_line();
        REQUIRE(li.coeff == CliffordElement(GR::frac(3, 4) * I));
    }
    SECTION("golden: deep pole integrand") {
        NumPoly n(4);
        n[0] = CliffordElement(GR(4));
        n[1] = CliffordElement(GR(12) * I);
        n[2] = CliffordElement(GR(-20));
        n[3] = CliffordElement(GR(-12) * I);
        LineIntegral li = PoleRational(std::move(n), 6, 4).integrate_line();
        REQUIRE(li.coeff == CliffordElement(GR::frac(-15, 16)));
    }
    SECTION("splits over the projections") {
        for (int k = 0; k < 200; ++k) {
            PoleRational r = random_proper();
            if (r.num_degree() > r.pole_plus() + r.pole_minus() - 2) continue;
            CliffordElement whole = r.integrate_line().coeff;
            CliffordElement split = r.pi_plus().integrate_line().coeff +
                                    r.pi_minus().integrate_line().coeff;
            REQUIRE(whole == split);
        }
    }
    SECTION("slow decay is rejected") {
        REQUIRE_THROWS_AS(one_over(1, 0).integrate_line(), NotIntegrable);
        NumPoly n(2);
        n[1] = CliffordElement::one();
        REQUIRE_THROWS_AS(PoleRational(std::move(n), 1, 1).integrate_line(), NotIntegrable);
    }
}

TEST_CASE("rendering round-trips structurally") {
    PoleRational r = c_xi().scaled(I) * one_over(2, 2);
    REQUIRE(r.str() == "((i)*A + ((i)*B)*xi)/((xi-i)^2*(xi+i)^2)");
}
