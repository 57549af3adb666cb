#pragma once

#include <array>
#include <string>

#include "kkw/errors.hpp"
#include "kkw/scalar_poly.hpp"

namespace kkw {

// Monomial algebra generated by A = c(xi'), B = c(dxn), P = d/dxn c(xi')
// with the boundary-point relations
//   A^2 = -u,  B^2 = -1,  AB + BA = 0,  AP + PA = -kappa*u,  BP + PB = 0.
// Canonical monomials are P^p A^a B^b, p,a,b in {0,1}. Products that would
// carry P^2 are outside the model and raise PDegreeOverflow.

enum Mono : int {
    M_1 = 0,
    M_B = 1,
    M_A = 2,
    M_AB = 3,
    M_P = 4,
    M_PB = 5,
    M_PA = 6,
    M_PAB = 7,
};

inline const char* mono_name(int m) {
    static const char* names[8] = {"1", "B", "A", "A*B", "P", "P*B", "P*A", "P*A*B"};
    return names[m];
}

// Rendering/iteration order: 1, A, B, A*B, P, P*A, P*B, P*A*B.
inline constexpr std::array<int, 8> mono_order = {M_1, M_A, M_B, M_AB, M_P, M_PA, M_PB, M_PAB};

class CliffordElement {
  public:
    CliffordElement() = default;
    CliffordElement(ScalarPoly s) { c_[M_1] = std::move(s); }  // NOLINT(google-explicit-constructor)
    CliffordElement(GaussianRational g) : CliffordElement(ScalarPoly(std::move(g))) {}  // NOLINT
    CliffordElement(long v) : CliffordElement(ScalarPoly(v)) {}  // NOLINT(google-explicit-constructor)

    static CliffordElement one() { return CliffordElement(ScalarPoly(1)); }
    static CliffordElement A() { return basis(M_A); }
    static CliffordElement B() { return basis(M_B); }
    static CliffordElement P() { return basis(M_P); }
    static CliffordElement basis(int mono) {
        CliffordElement e;
        e.c_[mono] = ScalarPoly(1);
        return e;
    }

    const ScalarPoly& coeff(int mono) const { return c_[mono]; }
    ScalarPoly& coeff(int mono) { return c_[mono]; }

    bool is_zero() const {
        for (const auto& s : c_)
            if (!s.is_zero()) return false;
        return true;
    }
    bool is_scalar() const {
        for (int m = 1; m < 8; ++m)
            if (!c_[m].is_zero()) return false;
        return true;
    }
    bool has_p() const { return !c_[M_P].is_zero() || !c_[M_PA].is_zero() || !c_[M_PB].is_zero() || !c_[M_PAB].is_zero(); }

    friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) r.c_[m] = x.c_[m] + y.c_[m];
        return r;
    }
    friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) r.c_[m] = x.c_[m] - y.c_[m];
        return r;
    }
    friend CliffordElement operator-(const CliffordElement& x) {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) r.c_[m] = -x.c_[m];
        return r;
    }
    CliffordElement& operator+=(const CliffordElement& o) { return *this = *this + o; }
    CliffordElement& operator-=(const CliffordElement& o) { return *this = *this - o; }

    // Scalars are central, so one scale suffices for either side.
    CliffordElement scaled(const ScalarPoly& s) const {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) r.c_[m] = c_[m] * s;
        return r;
    }
    CliffordElement scaled(const GaussianRational& g) const { return scaled(ScalarPoly(g)); }

    friend bool operator==(const CliffordElement& x, const CliffordElement& y) { return x.c_ == y.c_; }

    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
        CliffordElement r;
        for (int m2 = 0; m2 < 8; ++m2) {
            if (y.c_[m2].is_zero()) continue;
            // Start from x scaled by the right coefficient, then append the
            // letters of m2 in canonical order P, A, B.
            CliffordElement acc = x.scaled(y.c_[m2]);
            if (m2 & 4) acc = rmul_P(acc);
            if (m2 & 2) acc = rmul_A(acc);
            if (m2 & 1) acc = rmul_B(acc);
            r += acc;
        }
        return r;
    }
    CliffordElement& operator*=(const CliffordElement& o) { return *this = *this * o; }

    // tr over the spinor fiber, d = 2^floor(n/2). The only monomials with
    // nonzero trace are 1 (gives d) and P*A (gives -d/2 * kappa * u).
    ScalarPoly trace(int n) const {
        long d = 1L << (n / 2);
        ScalarPoly t = c_[M_1] * ScalarPoly(d);
        if (!c_[M_PA].is_zero()) {
            ScalarPoly ku = ScalarPoly::kappa() * ScalarPoly::u();
            t -= c_[M_PA] * ku * ScalarPoly(GaussianRational::frac(d, 2));
        }
        return t;
    }

    // d/dxn as a derivation: A -> P, B -> 0, P -> 0, plus the scalar rules.
    CliffordElement derivative_xn() const {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) {
            if (c_[m].is_zero()) continue;
            ScalarPoly ds = c_[m].derivative_xn();
            if (!ds.is_zero()) r.c_[m] = r.c_[m] + ds;
            if (m & 2) {  // replace the single A letter by P, in place
                int target = (m & ~2) | 4;
                if (m & 4)
                    throw PDegreeOverflow("derivative of P*A*... word produces P^2");
                r.c_[target] = r.c_[target] + c_[m];
            }
        }
        return r;
    }

    // Frame identity P = (kappa/2) A, used only for oracle-side comparisons.
    CliffordElement subst_P_half_kappa_A() const {
        CliffordElement r;
        ScalarPoly half_kappa = ScalarPoly::kappa() * ScalarPoly(GaussianRational::frac(1, 2));
        for (int m = 0; m < 8; ++m) {
            if (c_[m].is_zero()) continue;
            if (!(m & 4)) {
                r.c_[m] = r.c_[m] + c_[m];
                continue;
            }
            // P A^a B^b -> (kappa/2) A A^a B^b
            CliffordElement word = CliffordElement(c_[m] * half_kappa) * CliffordElement::A();
            if (m & 2) word = word * CliffordElement::A();
            if (m & 1) word = word * CliffordElement::B();
            r += word;
        }
        return r;
    }

    CliffordElement subst_u1() const {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) r.c_[m] = c_[m].subst_u1();
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int m : mono_order) {
            if (c_[m].is_zero()) continue;
            std::string coeff = "(" + c_[m].str() + ")";
            if (!first) out += " + ";
            out += (m == M_1) ? coeff : coeff + "*" + mono_name(m);
            first = false;
        }
        return out;
    }

  private:
    // Right-multiply by a single generator, rewriting to canonical form.
    static CliffordElement rmul_B(const CliffordElement& x) {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) {
            if (x.c_[m].is_zero()) continue;
            if (m & 1)
                r.c_[m & ~1] = r.c_[m & ~1] - x.c_[m];  // B^2 = -1
            else
                r.c_[m | 1] = r.c_[m | 1] + x.c_[m];
        }
        return r;
    }
    static CliffordElement rmul_A(const CliffordElement& x) {
        CliffordElement r;
        for (int m = 0; m < 8; ++m) {
            if (x.c_[m].is_zero()) continue;
            // Move A left past B^b: BA = -AB.
            ScalarPoly s = (m & 1) ? -x.c_[m] : x.c_[m];
            if (m & 2)
                r.c_[m & ~2] = r.c_[m & ~2] - s * ScalarPoly::u();  // A^2 = -u
            else
                r.c_[m | 2] = r.c_[m | 2] + s;
        }
        return r;
    }
    static CliffordElement rmul_P(const CliffordElement& x) {
        CliffordElement r;
        ScalarPoly ku = ScalarPoly::kappa() * ScalarPoly::u();
        for (int m = 0; m < 8; ++m) {
            if (x.c_[m].is_zero()) continue;
            // Move P left past B^b (BP = -PB), then past A^a (AP = -PA - kappa*u):
            //   P^p A B^b * P -> -P^{p+1} A B^b - kappa*u P^p B^b.
            ScalarPoly s = (m & 1) ? -x.c_[m] : x.c_[m];
            if (m & 2) {
                if (m & 4) throw PDegreeOverflow("product carries P^2");
                r.c_[m | 4] = r.c_[m | 4] - s;
                r.c_[m & ~2] = r.c_[m & ~2] - s * ku;
            } else {
                if (m & 4) throw PDegreeOverflow("product carries P^2");
                r.c_[m | 4] = r.c_[m | 4] + s;
            }
        }
        return r;
    }

    std::array<ScalarPoly, 8> c_;
};

inline CliffordElement operator*(const ScalarPoly& s, const CliffordElement& x) { return x.scaled(s); }
inline CliffordElement operator*(const GaussianRational& g, const CliffordElement& x) { return x.scaled(g); }

} // namespace kkw
