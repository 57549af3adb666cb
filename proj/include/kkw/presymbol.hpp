#pragma once

#include "kkw/pole_rational.hpp"

namespace kkw {

// num(xi_n) / |xi|^{2k} with |xi|^2 = u + xi_n^2 kept formal, so the normal
// derivative can act through u before the restriction u := 1. Used only by
// the symbol builders; everything downstream works on PoleRational.
class PreSymbol {
  public:
    PreSymbol() = default;
    PreSymbol(NumPoly num, int denom_pow) : num_(std::move(num)), k_(denom_pow) { poly::trim(num_); }
    PreSymbol(CliffordElement c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) num_.push_back(std::move(c));
    }

    static PreSymbol xi() {
        NumPoly n(2);
        n[1] = CliffordElement::one();
        return {std::move(n), 0};
    }
    // c(xi) = A + xi_n B
    static PreSymbol c_xi() {
        NumPoly n(2);
        n[0] = CliffordElement::A();
        n[1] = CliffordElement::B();
        return {std::move(n), 0};
    }
    // |xi|^2 as a numerator polynomial: u + xi_n^2
    static NumPoly xi_sq_poly() {
        NumPoly n(3);
        n[0] = CliffordElement(ScalarPoly::u());
        n[2] = CliffordElement::one();
        return n;
    }
    static PreSymbol inv_xi_sq(int k) { return {NumPoly{CliffordElement::one()}, k}; }

    const NumPoly& num() const { return num_; }
    int denom_pow() const { return k_; }
    bool is_zero() const { return num_.empty(); }

    friend PreSymbol operator+(const PreSymbol& x, const PreSymbol& y) {
        int K = std::max(x.k_, y.k_);
        return {poly::add(raise(x.num_, K - x.k_), raise(y.num_, K - y.k_)), K};
    }
    friend PreSymbol operator-(const PreSymbol& x, const PreSymbol& y) { return x + (-y); }
    friend PreSymbol operator-(const PreSymbol& x) { return {poly::neg(x.num_), x.k_}; }
    friend PreSymbol operator*(const PreSymbol& x, const PreSymbol& y) {
        return {poly::mul(x.num_, y.num_), x.k_ + y.k_};
    }
    PreSymbol& operator+=(const PreSymbol& o) { return *this = *this + o; }

    PreSymbol lmul(const CliffordElement& c) const { return {poly::scale(num_, c), k_}; }
    PreSymbol rmul(const CliffordElement& c) const { return {poly::scale_right(num_, c), k_}; }
    PreSymbol scaled(const ScalarPoly& s) const { return lmul(CliffordElement(s)); }
    PreSymbol scaled(const GaussianRational& g) const { return lmul(CliffordElement(g)); }

    // d/dxn at the boundary point: the numerator by the Clifford/scalar
    // derivation, the denominator via d|xi|^2 = kappa*u.
    PreSymbol derivative_xn() const {
        NumPoly dn(num_.size());
        for (size_t i = 0; i < num_.size(); ++i) dn[i] = num_[i].derivative_xn();
        poly::trim(dn);
        PreSymbol t1{std::move(dn), k_};
        if (k_ == 0) return t1;
        ScalarPoly ku = ScalarPoly::kappa() * ScalarPoly::u();
        PreSymbol t2{poly::scale(num_, CliffordElement(ku * ScalarPoly(k_))), k_ + 1};
        return t1 - t2;
    }

    PreSymbol diff_xi() const {
        PreSymbol t1{poly::diff(num_), k_};
        if (k_ == 0) return t1;
        NumPoly lin(2);
        lin[1] = CliffordElement(static_cast<long>(2 * k_));
        PreSymbol t2{poly::mul(num_, lin), k_ + 1};
        return t1 - t2;
    }

    // Restrict to u = 1: |xi|^{2k} becomes (xi-i)^k (xi+i)^k.
    PoleRational restrict_u1() const {
        NumPoly n(num_.size());
        for (size_t i = 0; i < num_.size(); ++i) n[i] = num_[i].subst_u1();
        return {std::move(n), k_, k_};
    }

  private:
    static NumPoly raise(const NumPoly& n, int dk) {
        NumPoly r = n;
        for (int i = 0; i < dk; ++i) r = poly::mul(r, xi_sq_poly());
        return r;
    }

    NumPoly num_;
    int k_ = 0;
};

} // namespace kkw
