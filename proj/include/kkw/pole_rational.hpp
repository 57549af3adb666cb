#pragma once

#include <string>
#include <vector>

#include "kkw/clifford.hpp"
#include "kkw/errors.hpp"

namespace kkw {

// Polynomial in xi_n with CliffordElement coefficients; coeffs[k] is the
// coefficient of xi_n^k. xi_n commutes with everything.
using NumPoly = std::vector<CliffordElement>;

namespace poly {

inline void trim(NumPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline int degree(const NumPoly& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

inline NumPoly add(const NumPoly& a, const NumPoly& b) {
    NumPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}
inline NumPoly neg(const NumPoly& a) {
    NumPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline NumPoly mul(const NumPoly& a, const NumPoly& b) {
    if (a.empty() || b.empty()) return {};
    NumPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}
inline NumPoly scale(const NumPoly& a, const CliffordElement& left) {
    NumPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = left * a[i];
    trim(r);
    return r;
}
inline NumPoly scale_right(const NumPoly& a, const CliffordElement& right) {
    NumPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * right;
    trim(r);
    return r;
}
inline NumPoly diff(const NumPoly& a) {
    if (a.size() <= 1) return {};
    NumPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i].scaled(GaussianRational(static_cast<long>(i)));
    trim(r);
    return r;
}
inline CliffordElement eval(const NumPoly& a, const GaussianRational& x) {
    CliffordElement acc;
    for (size_t i = a.size(); i-- > 0;) acc = acc.scaled(ScalarPoly(x)) + a[i];
    return acc;
}
// Multiply by the linear factor (xi - root).
inline NumPoly mul_linear(const NumPoly& a, const GaussianRational& root) {
    if (a.empty()) return {};
    NumPoly r(a.size() + 1);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i + 1] += a[i];
        r[i] -= a[i].scaled(root);
    }
    trim(r);
    return r;
}
// Synthetic division by (xi - root); valid only when eval(a, root) == 0.
inline NumPoly div_linear(const NumPoly& a, const GaussianRational& root) {
    NumPoly q(a.size() > 0 ? a.size() - 1 : 0);
    CliffordElement carry;
    for (size_t i = a.size(); i-- > 1;) {
        carry = a[i] + carry.scaled(root);
        q[i - 1] = carry;
    }
    trim(q);
    return q;
}

} // namespace poly

struct PartialFractions;
struct LineIntegral {
    // The exact value of the line integral is pi * coeff; the single factor
    // of pi is owed by the caller (the engine attaches it structurally).
    CliffordElement coeff;
    bool pi_owed = true;
};

// numerator(xi_n) / ((xi_n - i)^a (xi_n + i)^b), always stored reduced:
// when a > 0 the numerator does not vanish at +i, likewise for b at -i.
class PoleRational {
  public:
    PoleRational() = default;
    PoleRational(NumPoly num, int a, int b) : num_(std::move(num)), a_(a), b_(b) { normalize(); }
    PoleRational(CliffordElement c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) num_.push_back(std::move(c));
    }
    PoleRational(ScalarPoly s) : PoleRational(CliffordElement(std::move(s))) {}  // NOLINT
    PoleRational(GaussianRational g) : PoleRational(CliffordElement(std::move(g))) {}  // NOLINT
    PoleRational(long v) : PoleRational(CliffordElement(v)) {}  // NOLINT(google-explicit-constructor)

    static PoleRational xi() {
        NumPoly n(2);
        n[1] = CliffordElement::one();
        return {std::move(n), 0, 0};
    }

    const NumPoly& num() const { return num_; }
    int pole_plus() const { return a_; }
    int pole_minus() const { return b_; }
    bool is_zero() const { return num_.empty(); }
    bool is_polynomial() const { return a_ == 0 && b_ == 0; }
    int num_degree() const { return poly::degree(num_); }
    bool is_proper() const { return num_degree() < a_ + b_; }
    bool is_scalar() const {
        for (const auto& c : num_)
            if (!c.is_scalar()) return false;
        return true;
    }

    friend PoleRational operator+(const PoleRational& x, const PoleRational& y) {
        int A = std::max(x.a_, y.a_), B = std::max(x.b_, y.b_);
        NumPoly nx = raise(x.num_, A - x.a_, B - x.b_);
        NumPoly ny = raise(y.num_, A - y.a_, B - y.b_);
        return {poly::add(nx, ny), A, B};
    }
    friend PoleRational operator-(const PoleRational& x, const PoleRational& y) { return x + (-y); }
    friend PoleRational operator-(const PoleRational& x) {
        PoleRational r = x;
        r.num_ = poly::neg(r.num_);
        return r;
    }
    friend PoleRational operator*(const PoleRational& x, const PoleRational& y) {
        return {poly::mul(x.num_, y.num_), x.a_ + y.a_, x.b_ + y.b_};
    }
    PoleRational& operator+=(const PoleRational& o) { return *this = *this + o; }
    PoleRational& operator-=(const PoleRational& o) { return *this = *this - o; }
    PoleRational& operator*=(const PoleRational& o) { return *this = *this * o; }

    // Noncommutative scaling by a Clifford constant.
    PoleRational lmul(const CliffordElement& c) const { return {poly::scale(num_, c), a_, b_}; }
    PoleRational rmul(const CliffordElement& c) const { return {poly::scale_right(num_, c), a_, b_}; }
    PoleRational scaled(const ScalarPoly& s) const { return lmul(CliffordElement(s)); }
    PoleRational scaled(const GaussianRational& g) const { return lmul(CliffordElement(g)); }

    friend bool operator==(const PoleRational& x, const PoleRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.num_ == y.num_;
    }

    // d/dxi_n, exact:  [N' (xi-i)(xi+i) - N (a(xi+i) + b(xi-i))] / ((xi-i)^{a+1}(xi+i)^{b+1})
    PoleRational diff_xi() const {
        const GaussianRational I = GaussianRational::i();
        NumPoly dn = poly::diff(num_);
        NumPoly t1 = poly::mul_linear(poly::mul_linear(dn, I), -I);
        // a(xi+i) + b(xi-i) = (a+b) xi + (a-b) i
        NumPoly lin(2);
        lin[0] = CliffordElement(GaussianRational(mpq_class(0), mpq_class(a_ - b_)));
        lin[1] = CliffordElement(static_cast<long>(a_ + b_));
        poly::trim(lin);
        NumPoly t2 = poly::mul(num_, lin);
        return {poly::add(t1, poly::neg(t2)), a_ + 1, b_ + 1};
    }
    PoleRational diff_xi(int k) const {
        PoleRational r = *this;
        for (int i = 0; i < k; ++i) r = r.diff_xi();
        return r;
    }

    // Coefficient-wise Clifford trace; result has scalar coefficients.
    PoleRational trace(int n) const {
        NumPoly r(num_.size());
        for (size_t i = 0; i < num_.size(); ++i) r[i] = CliffordElement(num_[i].trace(n));
        return {std::move(r), a_, b_};
    }
    PoleRational subst_u1() const {
        NumPoly r(num_.size());
        for (size_t i = 0; i < num_.size(); ++i) r[i] = num_[i].subst_u1();
        return {std::move(r), a_, b_};
    }
    PoleRational map_coeffs(const auto& f) const {
        NumPoly r(num_.size());
        for (size_t i = 0; i < num_.size(); ++i) r[i] = f(num_[i]);
        return {std::move(r), a_, b_};
    }

    // Evaluate at a scalar point away from the poles.
    CliffordElement eval_at(const GaussianRational& x) const {
        const GaussianRational I = GaussianRational::i();
        CliffordElement n = poly::eval(num_, x);
        GaussianRational den = (x - I).pow(static_cast<unsigned>(a_)) * (x + I).pow(static_cast<unsigned>(b_));
        return n.scaled(GaussianRational(1) / den);
    }

    PartialFractions partial_fractions() const;
    PoleRational pi_plus() const;
    PoleRational pi_minus() const;
    LineIntegral integrate_line() const;

    std::string str() const {
        std::string n = num_str();
        if (a_ == 0 && b_ == 0) return n;
        std::string den;
        if (a_ > 0) den += "(xi-i)" + (a_ > 1 ? "^" + std::to_string(a_) : "");
        if (b_ > 0) {
            if (!den.empty()) den += "*";
            den += "(xi+i)" + (b_ > 1 ? "^" + std::to_string(b_) : "");
        }
        return "(" + n + ")/(" + den + ")";
    }
    std::string num_str() const {
        if (num_.empty()) return "0";
        std::string out;
        bool first = true;
        for (size_t k = 0; k < num_.size(); ++k) {
            if (num_[k].is_zero()) continue;
            std::string t = "(" + num_[k].str() + ")";
            if (k >= 1) t += "*xi";
            if (k >= 2) t += "^" + std::to_string(k);
            if (!first) out += " + ";
            out += t;
            first = false;
        }
        return out.empty() ? "0" : out;
    }

  private:
    void normalize() {
        poly::trim(num_);
        if (num_.empty()) {
            a_ = b_ = 0;
            return;
        }
        const GaussianRational I = GaussianRational::i();
        while (a_ > 0 && poly::eval(num_, I).is_zero()) {
            num_ = poly::div_linear(num_, I);
            --a_;
        }
        while (b_ > 0 && poly::eval(num_, -I).is_zero()) {
            num_ = poly::div_linear(num_, -I);
            --b_;
        }
    }
    static NumPoly raise(const NumPoly& n, int da, int db) {
        const GaussianRational I = GaussianRational::i();
        NumPoly r = n;
        for (int k = 0; k < da; ++k) r = poly::mul_linear(r, I);
        for (int k = 0; k < db; ++k) r = poly::mul_linear(r, -I);
        return r;
    }

    NumPoly num_;
    int a_ = 0;
    int b_ = 0;
};

// Exact decomposition: poly part + sum_m plus[m-1]/(xi-i)^m + minus[m-1]/(xi+i)^m.
struct PartialFractions {
    NumPoly poly_part;
    std::vector<CliffordElement> plus;   // index m-1 -> coefficient of (xi-i)^{-m}
    std::vector<CliffordElement> minus;  // index m-1 -> coefficient of (xi+i)^{-m}

    PoleRational recombine() const {
        PoleRational acc(poly_part, 0, 0);
        for (size_t m = 1; m <= plus.size(); ++m)
            acc += PoleRational(NumPoly{plus[m - 1]}, static_cast<int>(m), 0);
        for (size_t m = 1; m <= minus.size(); ++m)
            acc += PoleRational(NumPoly{minus[m - 1]}, 0, static_cast<int>(m));
        return acc;
    }
};

inline PartialFractions PoleRational::partial_fractions() const {
    const GaussianRational I = GaussianRational::i();
    PartialFractions pf;
    if (is_zero()) return pf;

    // Split off the polynomial part by subtracting principal parts instead of
    // long division: the principal-part coefficients only depend on the
    // function near each pole, so compute them first from *this directly.
    pf.plus.assign(static_cast<size_t>(a_), CliffordElement{});
    pf.minus.assign(static_cast<size_t>(b_), CliffordElement{});

    if (a_ > 0) {
        // g = num/(xi+i)^b; c_{+i,m} = g^{(a-m)}(i)/(a-m)!
        PoleRational g(num_, 0, b_);
        mpq_class fact = 1;
        for (int k = 0; k <= a_ - 1; ++k) {
            int m = a_ - k;  // after k differentiations
            if (k > 0) fact *= k;
            pf.plus[static_cast<size_t>(m - 1)] =
                g.eval_at(I).scaled(GaussianRational(mpq_class(1) / fact));
            if (m > 1) g = g.diff_xi();
        }
    }
    if (b_ > 0) {
        PoleRational g(num_, a_, 0);
        mpq_class fact = 1;
        for (int k = 0; k <= b_ - 1; ++k) {
            int m = b_ - k;
            if (k > 0) fact *= k;
            pf.minus[static_cast<size_t>(m - 1)] =
                g.eval_at(-I).scaled(GaussianRational(mpq_class(1) / fact));
            if (m > 1) g = g.diff_xi();
        }
    }
    // Strip zero leading principal coefficients (reduced representation
    // guarantees the top one is nonzero, but be safe).
    while (!pf.plus.empty() && pf.plus.back().is_zero()) pf.plus.pop_back();
    while (!pf.minus.empty() && pf.minus.back().is_zero()) pf.minus.pop_back();

    PoleRational principal;
    for (size_t m = 1; m <= pf.plus.size(); ++m)
        principal += PoleRational(NumPoly{pf.plus[m - 1]}, static_cast<int>(m), 0);
    for (size_t m = 1; m <= pf.minus.size(); ++m)
        principal += PoleRational(NumPoly{pf.minus[m - 1]}, 0, static_cast<int>(m));
    PoleRational rest = *this - principal;
    if (!rest.is_polynomial())
        throw std::logic_error("partial fractions: residual part still has poles");
    pf.poly_part = rest.num();
    return pf;
}

inline PoleRational PoleRational::pi_plus() const {
    if (!is_proper())
        throw ImproperRational("pi^+ undefined: numerator degree >= pole order");
    PartialFractions pf = partial_fractions();
    PoleRational r;
    for (size_t m = 1; m <= pf.plus.size(); ++m)
        r += PoleRational(NumPoly{pf.plus[m - 1]}, static_cast<int>(m), 0);
    return r;
}

inline PoleRational PoleRational::pi_minus() const {
    if (!is_proper())
        throw ImproperRational("pi^- undefined: numerator degree >= pole order");
    PartialFractions pf = partial_fractions();
    PoleRational r;
    for (size_t m = 1; m <= pf.minus.size(); ++m)
        r += PoleRational(NumPoly{pf.minus[m - 1]}, 0, static_cast<int>(m));
    return r;
}

// Integral over the real line, closed in the upper half-plane:
//   int = 2*pi*i * Res_{+i} = pi * (2i * c_1),
// where c_1 is the order-1 principal coefficient at +i.
inline LineIntegral PoleRational::integrate_line() const {
    if (num_degree() > a_ + b_ - 2)
        throw NotIntegrable("integrand does not decay like xi^-2");
    LineIntegral li;
    if (a_ == 0) return li;  // no pole in the upper half-plane
    PartialFractions pf = partial_fractions();
    if (!pf.plus.empty())
        li.coeff = pf.plus[0].scaled(GaussianRational(mpq_class(0), mpq_class(2)));
    return li;
}

} // namespace kkw
