#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "kkw/engine.hpp"

namespace kkw {

// Concrete gamma-matrix model of the abstract algebra: Hermitian anticommuting
// generators e_i with e_i^2 = 1 built from Pauli tensors, c(v) = i sum v_i e_i.
// A = c(xi') for a concrete unit covector xi', B = c(dxn), P = (kappa/2) A
// (the value forced by the rescaled frame). Scalar outputs (traces, integrals)
// are comparable with the exact engine; the matrix model itself carries more
// relations than the abstract algebra, so only scalars are compared.
struct NumericContext {
    int n = 6;
    int dim = 8;
    double kappa = 0.3, f0 = 0.7, f1 = -1.1;
    Eigen::VectorXd xi_prime;             // unit vector in R^{n-1}
    std::vector<Eigen::MatrixXcd> e;      // n Hermitian generators
    Eigen::MatrixXcd A, B, P, Id;

    NumericContext(int n_, unsigned seed, double kappa_ = 0.3, double f0_ = 0.7,
                   double f1_ = -1.1)
        : n(n_), kappa(kappa_), f0(f0_), f1(f1_) {
        if (n != 5 && n != 6) throw UnsupportedConfiguration("numeric model needs n = 5 or 6");
        dim = 1 << (n / 2);
        build_generators();
        self_check();

        std::mt19937 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        xi_prime = Eigen::VectorXd(n - 1);
        do {
            for (int i = 0; i < n - 1; ++i) xi_prime[i] = gauss(rng);
        } while (xi_prime.norm() < 1e-6);
        xi_prime.normalize();

        const std::complex<double> I(0, 1);
        A = Eigen::MatrixXcd::Zero(dim, dim);
        for (int i = 0; i < n - 1; ++i) A += I * xi_prime[i] * e[i];
        B = I * e[n - 1];
        P = (kappa / 2.0) * A;
        Id = Eigen::MatrixXcd::Identity(dim, dim);
    }

    // Matrix for a canonical monomial P^p A^a B^b.
    Eigen::MatrixXcd mono(int m) const {
        Eigen::MatrixXcd r = Id;
        if (m & 4) r = r * P;
        if (m & 2) r = r * A;
        if (m & 1) r = r * B;
        return r;
    }

    SymValues values() const { return {kappa, 1.0, f0, f1}; }

  private:
    void build_generators() {
        using M = Eigen::MatrixXcd;
        const std::complex<double> I(0, 1);
        M sx(2, 2), sy(2, 2), sz(2, 2), id = M::Identity(2, 2);
        sx << 0, 1, 1, 0;
        sy << 0, -I, I, 0;
        sz << 1, 0, 0, -1;
        auto kron3 = [](const M& a, const M& b, const M& c) {
            return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval()).eval();
        };
        auto kron2 = [](const M& a, const M& b) { return Eigen::kroneckerProduct(a, b).eval(); };
        e.clear();
        if (n == 6) {
            e.push_back(kron3(sx, id, id));
            e.push_back(kron3(sy, id, id));
            e.push_back(kron3(sz, sx, id));
            e.push_back(kron3(sz, sy, id));
            e.push_back(kron3(sz, sz, sx));
            e.push_back(kron3(sz, sz, sy));
        } else {
            e.push_back(kron2(sx, id));
            e.push_back(kron2(sy, id));
            e.push_back(kron2(sz, sx));
            e.push_back(kron2(sz, sy));
            e.push_back(kron2(sz, sz));
        }
    }

    void self_check() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                Eigen::MatrixXcd anti = e[i] * e[j] + e[j] * e[i];
                Eigen::MatrixXcd want =
                    (i == j) ? Eigen::MatrixXcd(2.0 * Eigen::MatrixXcd::Identity(dim, dim))
                             : Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(dim, dim));
                if ((anti - want).norm() > 1e-12)
                    throw RelationCheckFailed("generator anticommutator check failed");
            }
    }
};

inline std::complex<double> numeric_trace(const CliffordElement& c, const NumericContext& ctx) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ctx.dim, ctx.dim);
    SymValues v = ctx.values();
    for (int mono = 0; mono < 8; ++mono) {
        if (c.coeff(mono).is_zero()) continue;
        m += c.coeff(mono).eval(v) * ctx.mono(mono);
    }
    return m.trace();
}

// Evaluate a scalar-coefficient fiber-trace of a PoleRational at real xi via
// the gamma-matrix trace of its Clifford-valued numerator.
inline std::complex<double> numeric_trace_at(const PoleRational& p, double xi,
                                             const NumericContext& ctx) {
    const std::complex<double> I(0, 1);
    std::complex<double> num = 0, pw = 1;
    for (const auto& c : p.num()) {
        num += pw * numeric_trace(c, ctx);
        pw *= xi;
    }
    std::complex<double> den = 1;
    std::complex<double> zm = xi - I, zp = xi + I;
    for (int k = 0; k < p.pole_plus(); ++k) den *= zm;
    for (int k = 0; k < p.pole_minus(); ++k) den *= zp;
    return num / den;
}

namespace detail {

inline std::complex<double> simpson(const std::function<std::complex<double>(double)>& f, double a,
                                    double b, std::complex<double> fa, std::complex<double> fm,
                                    std::complex<double> fb, std::complex<double> whole, double eps,
                                    int depth) {
    double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    std::complex<double> flm = f(lm), frm = f(rm);
    std::complex<double> left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    std::complex<double> right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0) throw ToleranceNotReached("adaptive quadrature recursion limit");
    if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

} // namespace detail

// Integrate f over the whole real line. f must decay like |xi|^-decay_order
// with decay_order >= 2, so the substitution xi = tan(theta) turns the line
// integral into one over a finite interval with a bounded integrand; the
// clamped sliver at the endpoints (|xi| > 1e12) is negligible below tol.
inline std::complex<double> numeric_integrate(const std::function<std::complex<double>(double)>& f,
                                              int decay_order, double tol = 1e-10) {
    if (decay_order < 2) throw NotIntegrable("decay order below 2 in numeric_integrate");
    const double half_pi = std::acos(-1.0) / 2.0;
    const double clamp = half_pi - 1e-12;
    auto g = [&](double theta) -> std::complex<double> {
        double t = std::clamp(theta, -clamp, clamp);
        double x = std::tan(t);
        double sec2 = 1.0 + x * x;
        return f(x) * sec2;
    };
    std::complex<double> fa = g(-half_pi), fm = g(0.0), fb = g(half_pi);
    std::complex<double> whole = (2.0 * half_pi) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson(g, -half_pi, half_pi, fa, fm, fb, whole, tol / 2.0, 60);
}

struct CaseCheck {
    std::string label;
    double rel_err = 0;     // numeric vs exact, worst over directions/seeds
    double spread = 0;      // xi'-direction dependence of the numeric value
    bool pass = false;
};

struct OracleReport {
    int n = 6, p1 = 1, p2 = 3;
    Perturbation perturb = Perturbation::None;
    std::vector<CaseCheck> cases;
    double total_rel_err = 0;
    bool negative_control_detected = false;
    bool pass = false;
};

// Recompute every non-vanishing case of the boundary sum by gamma-matrix
// trace plus adaptive quadrature and compare with the exact engine value.
inline OracleReport crosscheck_phi(int n, int p1, int p2,
                                   Perturbation pert = Perturbation::None, double tol = 1e-8,
                                   int num_dirs = 5, int num_seeds = 3) {
    OracleReport rep;
    rep.n = n;
    rep.p1 = p1;
    rep.p2 = p2;
    rep.perturb = pert;
    PhiReport exact = phi(n, p1, p2, pert);

    std::vector<unsigned> seeds;
    for (int s = 0; s < num_seeds; ++s) seeds.push_back(20240u + 7u * static_cast<unsigned>(s));

    std::complex<double> exact_total = 0, numeric_total = 0;
    SymValues vals{0.3, 1.0, 0.7, -1.1};

    for (const auto& c : exact.cases) {
        if (c.vanished) continue;
        CaseCheck chk;
        chk.label = c.label;
        std::complex<double> expected = M_PI * c.integral.eval(vals);
        std::complex<double> pre = c.prefactor.to_complex();
        int decay = (c.product.pole_plus() + c.product.pole_minus()) - c.product.num_degree();

        std::complex<double> first_val = 0;
        bool have_first = false;
        for (unsigned seed : seeds) {
            for (int d = 0; d < num_dirs; ++d) {
                NumericContext ctx(n, seed + 1000u * static_cast<unsigned>(d), vals.kappa,
                                   vals.f0, vals.f1);
                auto f = [&](double xi) { return pre * numeric_trace_at(c.product, xi, ctx); };
                std::complex<double> val = numeric_integrate(f, decay, tol * 1e-2);
                if (!have_first) {
                    first_val = val;
                    have_first = true;
                } else {
                    chk.spread = std::max(chk.spread, std::abs(val - first_val));
                }
                double scale = std::max(1.0, std::abs(expected));
                chk.rel_err = std::max(chk.rel_err, std::abs(val - expected) / scale);
            }
        }
        chk.pass = (chk.rel_err <= tol) && (chk.spread < 1e-9);
        exact_total += expected;
        numeric_total += first_val;
        // Negative control: for a case with a nonzero value, the deliberately
        // negated expectation must be rejected at the same tolerance.
        if (std::abs(expected) > tol &&
            std::abs(first_val + expected) / std::max(1.0, std::abs(expected)) > tol)
            rep.negative_control_detected = true;
        rep.cases.push_back(chk);
    }

    double tscale = std::max(1.0, std::abs(exact_total));
    rep.total_rel_err = std::abs(numeric_total - exact_total) / tscale;

    rep.pass = rep.total_rel_err <= tol && rep.negative_control_detected;
    for (const auto& c : rep.cases) rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace kkw
