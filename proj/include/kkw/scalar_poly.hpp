#pragma once

#include <array>
#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "kkw/gaussian.hpp"

namespace kkw {

// Formal commuting constants the coefficient ring is extended by:
//   kappa = h'(0), u = |xi'|^2, f0 = f(x0), f1 = d/dxn f(x0).
enum class Sym { kappa = 0, u = 1, f0 = 2, f1 = 3 };

inline const char* sym_name(Sym s) {
    switch (s) {
        case Sym::kappa: return "kappa";
        case Sym::u: return "u";
        case Sym::f0: return "f0";
        default: return "f1";
    }
}

struct Expo {
    std::array<int, 4> e{0, 0, 0, 0};
    auto operator<=>(const Expo&) const = default;
    int& operator[](Sym s) { return e[static_cast<int>(s)]; }
    int operator[](Sym s) const { return e[static_cast<int>(s)]; }
    bool trivial() const { return e == std::array<int, 4>{0, 0, 0, 0}; }
};

// Values for a full numeric evaluation.
struct SymValues {
    double kappa = 0, u = 1, f0 = 0, f1 = 0;
    double get(Sym s) const {
        switch (s) {
            case Sym::kappa: return kappa;
            case Sym::u: return u;
            case Sym::f0: return f0;
            default: return f1;
        }
    }
};

// Polynomial over Gaussian rationals in {kappa, u, f0, f1}. Zero coefficients
// are never stored, so structural equality is canonical equality.
class ScalarPoly {
  public:
    ScalarPoly() = default;
    ScalarPoly(GaussianRational c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[Expo{}] = std::move(c);
    }
    ScalarPoly(long v) : ScalarPoly(GaussianRational(v)) {}  // NOLINT(google-explicit-constructor)

    static ScalarPoly sym(Sym s, int pow = 1) {
        ScalarPoly p;
        Expo ex;
        ex[s] = pow;
        p.terms_[ex] = GaussianRational(1);
        return p;
    }
    static ScalarPoly kappa() { return sym(Sym::kappa); }
    static ScalarPoly u() { return sym(Sym::u); }
    static ScalarPoly f0() { return sym(Sym::f0); }
    static ScalarPoly f1() { return sym(Sym::f1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.trivial());
    }
    std::optional<GaussianRational> as_constant() const {
        if (terms_.empty()) return GaussianRational(0);
        if (is_constant()) return terms_.begin()->second;
        return std::nullopt;
    }
    const std::map<Expo, GaussianRational>& terms() const { return terms_; }

    void add_term(const Expo& ex, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(ex);
        if (it == terms_.end()) {
            terms_.emplace(ex, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r = a;
        for (const auto& [ex, c] : b.terms_) r.add_term(ex, c);
        return r;
    }
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r = a;
        for (const auto& [ex, c] : b.terms_) r.add_term(ex, -c);
        return r;
    }
    friend ScalarPoly operator-(const ScalarPoly& a) {
        ScalarPoly r;
        for (const auto& [ex, c] : a.terms_) r.terms_[ex] = -c;
        return r;
    }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo ex;
                for (int i = 0; i < 4; ++i) ex.e[i] = ea.e[i] + eb.e[i];
                r.add_term(ex, ca * cb);
            }
        return r;
    }
    ScalarPoly& operator+=(const ScalarPoly& o) { return *this = *this + o; }
    ScalarPoly& operator-=(const ScalarPoly& o) { return *this = *this - o; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }

    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.terms_ == b.terms_; }

    // Eliminate the listed symbols by numeric (exact) substitution.
    ScalarPoly subst(const std::map<Sym, GaussianRational>& assignments) const {
        ScalarPoly r;
        for (const auto& [ex, c] : terms_) {
            Expo rem = ex;
            GaussianRational coeff = c;
            for (const auto& [s, v] : assignments) {
                int p = rem[s];
                if (p > 0) coeff *= v.pow(static_cast<unsigned>(p));
                rem[s] = 0;
            }
            r.add_term(rem, coeff);
        }
        return r;
    }
    ScalarPoly subst_u1() const { return subst({{Sym::u, GaussianRational(1)}}); }

    std::complex<double> eval(const SymValues& v) const {
        std::complex<double> acc = 0;
        for (const auto& [ex, c] : terms_) {
            double m = 1;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < ex.e[i]; ++k) m *= v.get(static_cast<Sym>(i));
            acc += c.to_complex() * m;
        }
        return acc;
    }

    // The boundary-point normal derivative acting on the constants:
    //   d(u^m) = m*kappa*u^m   (u = h(xn)|xi'|^2, h(0)=1, h'(0)=kappa)
    //   d(f0)  = f1,  d(kappa) = d(f1) = 0.
    ScalarPoly derivative_xn() const {
        ScalarPoly r;
        for (const auto& [ex, c] : terms_) {
            if (int mu = ex[Sym::u]; mu > 0) {
                Expo t = ex;
                t[Sym::kappa] += 1;
                r.add_term(t, c * GaussianRational(mu));
            }
            if (int mf = ex[Sym::f0]; mf > 0) {
                Expo t = ex;
                t[Sym::f0] -= 1;
                t[Sym::f1] += 1;
                r.add_term(t, c * GaussianRational(mf));
            }
        }
        return r;
    }

    int max_degree(Sym s) const {
        int d = 0;
        for (const auto& [ex, c] : terms_) d = std::max(d, ex[s]);
        return d;
    }
    bool depends_on(Sym s) const { return max_degree(s) > 0; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [ex, c] : terms_) {
            std::string t = c.str();
            for (int i = 0; i < 4; ++i) {
                if (ex.e[i] == 0) continue;
                t += "*";
                t += sym_name(static_cast<Sym>(i));
                if (ex.e[i] > 1) t += "^" + std::to_string(ex.e[i]);
            }
            if (!first) out += " + ";
            out += t;
            first = false;
        }
        return out;
    }

  private:
    std::map<Expo, GaussianRational> terms_;
};

} // namespace kkw
