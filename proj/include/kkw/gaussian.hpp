#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace kkw {

// Complex number with rational real and imaginary parts, exact.
// mpq_class keeps fractions canonical (lowest terms, positive denominator).
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}     // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational frac(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    // a/b + (c/d)i from integer parts
    static GaussianRational make(long rn, long rd, long in_, long id) {
        mpq_class r(rn, rd), i(in_, id);
        r.canonicalize();
        i.canonicalize();
        return GaussianRational(std::move(r), std::move(i));
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class n = b.re * b.re + b.im * b.im;
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(unsigned e) const {
        GaussianRational r(1);
        GaussianRational base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    // "3/4", "-i", "(1/2+3*i)" -- parenthesized only when both parts nonzero.
    std::string str() const {
        if (is_zero()) return "0";
        if (im == 0) return re.get_str();
        std::string imp = (im == 1) ? "i" : (im == -1) ? "-i" : im.get_str() + "*i";
        if (re == 0) return imp;
        std::string s = "(" + re.get_str();
        if (im > 0) s += "+";
        s += imp + ")";
        return s;
    }
};

} // namespace kkw
