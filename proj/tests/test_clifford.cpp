#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "kkw/clifford.hpp"

using namespace kkw;
using GR = GaussianRational;

namespace {

const CliffordElement A = CliffordElement::A();
const CliffordElement B = CliffordElement::B();
const CliffordElement P = CliffordElement::P();
const ScalarPoly kap = ScalarPoly::kappa();
const ScalarPoly u = ScalarPoly::u();

std::mt19937 rng(777u);

CliffordElement random_element(bool allow_p) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    CliffordElement e;
    for (int m = 0; m < 8; ++m) {
        if (!allow_p && (m & 4)) continue;
        long c = coeff(rng);
        if (c != 0) e.coeff(m) = ScalarPoly(GR(c));
    }
    return e;
}

} // namespace

TEST_CASE("generator relations") {
    REQUIRE(A * A == CliffordElement(-u));
    REQUIRE(B * B == CliffordElement(GR(-1)));
    REQUIRE(A * B + B * A == CliffordElement());
    REQUIRE(A * P + P * A == CliffordElement(-(kap * u)));
    REQUIRE(B * P + P * B == CliffordElement());
    REQUIRE(B * A == -(A * B));
    REQUIRE(A * P == -(P * A) - CliffordElement(kap * u));
}

TEST_CASE("P-degree cap") {
    REQUIRE_THROWS_AS(P * P, PDegreeOverflow);
    REQUIRE_THROWS_AS((P * A) * P, PDegreeOverflow);
    CliffordElement pa = P * A;
    REQUIRE_THROWS_AS(pa.derivative_xn(), PDegreeOverflow);
}

TEST_CASE("trace rules") {
    SECTION("identity") {
        REQUIRE(CliffordElement::one().trace(6) == ScalarPoly(8));
        REQUIRE(CliffordElement::one().trace(5) == ScalarPoly(4));
    }
    SECTION("P*A at u=1") {
        ScalarPoly t = (P * A).trace(6).subst_u1();
        REQUIRE(t == ScalarPoly(GR(-4)) * kap);
    }
    SECTION("odd words are traceless") {
        REQUIRE((A * B).trace(6).is_zero());
        REQUIRE(A.trace(6).is_zero());
        REQUIRE(B.trace(6).is_zero());
        REQUIRE(P.trace(6).is_zero());
        REQUIRE((P * A * B).trace(6).is_zero());
        REQUIRE((P * B).trace(6).is_zero());
    }
    SECTION("ABAB at u=1") {
        ScalarPoly t = (A * B * A * B).trace(6).subst_u1();
        REQUIRE(t == ScalarPoly(GR(-8)));
    }
}

TEST_CASE("trace cyclicity, 1000 random pairs") {
    for (int k = 0; k < 1000; ++k) {
        bool p_left = (k % 2) == 0;
        CliffordElement x = random_element(p_left);
        CliffordElement y = random_element(!p_left);
        REQUIRE((x * y).trace(6) == (y * x).trace(6));
        REQUIRE((x * y).trace(5) == (y * x).trace(5));
    }
}

TEST_CASE("rewriting confluence: any bracketing of an atom product agrees") {
    std::uniform_int_distribution<int> len(2, 6), pick(0, 2);
    for (int k = 0; k < 300; ++k) {
        std::vector<CliffordElement> atoms;
        int n = len(rng);
        bool used_p = false;
        for (int j = 0; j < n; ++j) {
            int a = pick(rng);
            if (a == 2 && used_p) a = pick(rng) % 2;
            if (a == 2) used_p = true;
            atoms.push_back(a == 0 ? A : a == 1 ? B : P);
        }
        CliffordElement left = atoms[0];
        for (size_t j = 1; j < atoms.size(); ++j) left = left * atoms[j];
        CliffordElement right = atoms.back();
        for (size_t j = atoms.size() - 1; j-- > 0;) right = atoms[j] * right;
        REQUIRE(left == right);
    }
}

TEST_CASE("multiplication is associative (randomized)") {
    for (int k = 0; k < 300; ++k) {
        CliffordElement x = random_element(false), y = random_element(false);
        CliffordElement z = random_element(k % 3 == 0);
        REQUIRE((x * y) * z == x * (y * z));
    }
}

TEST_CASE("normal derivative acts as a derivation with A -> P") {
    REQUIRE(A.derivative_xn() == P);
    REQUIRE(B.derivative_xn().is_zero());
    REQUIRE(P.derivative_xn().is_zero());
    SECTION("Leibniz on A*B") {
        REQUIRE((A * B).derivative_xn() == P * B);
    }
    SECTION("scalar chain rule through u") {
        CliffordElement uA = A.scaled(u);
        REQUIRE(uA.derivative_xn() == P.scaled(u) + A.scaled(kap * u));
    }
}

TEST_CASE("frame substitution P = (kappa/2) A preserves the trace rules") {
    ScalarPoly half_k = kap * ScalarPoly(GR::frac(1, 2));
    SECTION("on P*A") {
        CliffordElement s = (P * A).subst_P_half_kappa_A();
        REQUIRE(s == (A * A).scaled(half_k));
        REQUIRE(s.trace(6) == (P * A).trace(6));
    }
    SECTION("randomized trace agreement") {
        for (int k = 0; k < 200; ++k) {
            CliffordElement x = random_element(true);
            REQUIRE(x.subst_P_half_kappa_A().trace(6) == x.trace(6));
        }
    }
}

TEST_CASE("rendering uses canonical monomial names") {
    CliffordElement e = (P * A).scaled(GR(2)) + CliffordElement::one();
    REQUIRE(e.str() == "(1) + (2)*P*A");
}
