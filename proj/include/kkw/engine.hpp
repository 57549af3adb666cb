#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kkw/symbols.hpp"

namespace kkw {

enum class Perturbation { None, LeftMultiplyF };

inline const char* perturbation_name(Perturbation p) {
    return p == Perturbation::LeftMultiplyF ? "left-multiply-f" : "none";
}

// Structural multipliers: every case value is  integral * pi^pi_power * Omega_{omega_index}.
// pi comes from the contour integral, Omega_{n-2} from the unit-sphere factor
// (integrands are xi'-free after the fiber trace, which the oracle verifies).
struct Multiplier {
    int pi_power = 1;
    int omega_index = 4;
};

struct CaseSpec {
    int r = 0, l = 0;
    int j = 0, k = 0, alpha = 0;
};

struct CaseResult {
    CaseSpec spec;
    std::string label;
    bool vanished = false;
    std::string vanish_reason;

    GaussianRational prefactor;   // the (-i)^{|a|+j+k+1}/(a!(j+k+1)!) factor actually applied
    PoleRational trace_raw;       // tr[left x right] without the prefactor
    PoleRational integrand_trace; // prefactor * trace_raw
    PoleRational product;         // Clifford-valued left*right, for the numeric oracle
    ScalarPoly integral;          // exact value; full case value = integral * pi * Omega
    Multiplier multiplier;

    std::optional<ScalarPoly> paper_value;  // reference printed value, when one exists
    std::optional<bool> match;
    std::string note;
};

struct MismatchReport {
    std::string label;
    ScalarPoly computed;
    ScalarPoly reference;
    ScalarPoly residual;
};

struct PhiReport {
    int n = 6, p1 = 1, p2 = 3;
    Perturbation perturb = Perturbation::None;
    std::vector<CaseResult> cases;
    ScalarPoly total;
    Multiplier multiplier;
    std::optional<ScalarPoly> paper_total;
    std::optional<bool> total_match;
    std::optional<ScalarPoly> bc_sum;   // for (2,2): case b + case c
    std::optional<bool> bc_sum_zero;
    std::vector<MismatchReport> mismatches;

    bool all_match() const {
        for (const auto& c : cases)
            if (c.match && !*c.match) return false;
        if (total_match && !*total_match) return false;
        return true;
    }
};

namespace detail {

inline std::string tag_for_power(int p) {
    switch (p) {
        case 1: return "Dinv1";
        case 2: return "Dinv2";
        case 3: return "Dinv3";
        default: throw UnsupportedConfiguration("no symbol table for D^-" + std::to_string(p));
    }
}

inline void check_supported(int n, int p1, int p2) {
    bool ok = (n == 6 && p1 == 1 && p2 == 3) || (n == 5 && p1 == 1 && p2 == 3) ||
              (n == 6 && p1 == 2 && p2 == 2);
    if (!ok)
        throw UnsupportedConfiguration("unsupported configuration (n,p1,p2) = (" + std::to_string(n) +
                                       "," + std::to_string(p1) + "," + std::to_string(p2) + ")");
}

} // namespace detail

// Admissible derivative tuples for the boundary sum: the constraint is
// k + j + |alpha| = (n-1) + r + l with r <= -p1, l <= -p2, and the symbol
// table reaches one order below leading on each side.
inline std::vector<CaseSpec> enumerate_cases(int n, int p1, int p2) {
    detail::check_supported(n, p1, p2);
    std::vector<CaseSpec> out;
    const int lead1 = -p1, lead2 = -p2;
    auto budget = [&](int r, int l) { return (n - 1) + r + l; };
    // order: a I (alpha), a II (j), a III (k), b, c — matching report layout
    if (budget(lead1, lead2) == 1) {
        out.push_back({lead1, lead2, 0, 0, 1});
        out.push_back({lead1, lead2, 1, 0, 0});
        out.push_back({lead1, lead2, 0, 1, 0});
    } else if (budget(lead1, lead2) == 0) {
        out.push_back({lead1, lead2, 0, 0, 0});
    }
    if (budget(lead1, lead2 - 1) == 0) out.push_back({lead1, lead2 - 1, 0, 0, 0});
    if (budget(lead1 - 1, lead2) == 0) out.push_back({lead1 - 1, lead2, 0, 0, 0});
    return out;
}

inline std::string case_label(const CaseSpec& s, int p1, int p2) {
    const int lead1 = -p1, lead2 = -p2;
    if (s.r == lead1 && s.l == lead2) {
        if (s.alpha >= 1) return "aI";
        if (s.j == 1) return "aII";
        if (s.k == 1) return "aIII";
        return "a";
    }
    if (s.r == lead1 && s.l == lead2 - 1) return "b";
    return "c";
}

// Reference (printed) values, as coefficients of pi * Omega_{n-2}.
inline std::optional<ScalarPoly> reference_value(int n, int p1, int p2, Perturbation pert,
                                                 const std::string& label, bool total = false) {
    using GR = GaussianRational;
    ScalarPoly k = ScalarPoly::kappa(), f0 = ScalarPoly::f0(), f1 = ScalarPoly::f1();
    if (n == 6 && p1 == 1 && p2 == 3) {
        if (total) return ScalarPoly(GR::make(15, 16, -35, 16)) * k;
        if (label == "aI") return ScalarPoly();
        if (label == "aII") return ScalarPoly(GR::frac(-15, 16)) * k;
        if (label == "aIII") return ScalarPoly(GR::frac(25, 16)) * k;
        if (label == "b") return ScalarPoly(GR::make(-25, 8, -35, 16)) * k;
        if (label == "c") return ScalarPoly(GR::frac(55, 16)) * k;
    }
    if (n == 5 && p1 == 1 && p2 == 3) {
        if (total || label == "a") return ScalarPoly(GR::make(0, 1, 3, 4));
    }
    if (n == 6 && p1 == 2 && p2 == 2 && pert == Perturbation::LeftMultiplyF) {
        if (total) return ScalarPoly(GR::make(0, 1, 3, 1)) * f1;
        if (label == "aI") return ScalarPoly();
        if (label == "aII")
            return ScalarPoly(GR::frac(-5, 8)) * k * f0 + ScalarPoly(GR::make(0, 1, 3, 1)) * f1;
        if (label == "aIII") return ScalarPoly(GR::frac(5, 8)) * k * f0;
        // b and c are only printed as a vanishing sum
    }
    if (n == 6 && p1 == 2 && p2 == 2 && pert == Perturbation::None) {
        if (total) return ScalarPoly();
        if (label == "aI") return ScalarPoly();
        if (label == "aII") return ScalarPoly(GR::frac(-5, 8)) * k;
        if (label == "aIII") return ScalarPoly(GR::frac(5, 8)) * k;
    }
    return std::nullopt;
}

inline CaseResult eval_case(const CaseSpec& s, int n, int p1, int p2,
                            Perturbation pert = Perturbation::None) {
    CaseResult r;
    r.spec = s;
    r.label = case_label(s, p1, p2);
    r.multiplier = {1, n - 2};

    if (s.alpha >= 1) {
        r.vanished = true;
        r.vanish_reason =
            "tangential x'-derivative of the right symbol vanishes at x0 in normal coordinates";
        r.integral = ScalarPoly();
        r.prefactor = GaussianRational(0);
        return r;
    }

    // coefficient (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!)
    GaussianRational pre = (GaussianRational(0) - GaussianRational::i())
                               .pow(static_cast<unsigned>(s.alpha + s.j + s.k + 1));
    long fact = 1;
    for (long m = 2; m <= s.j + s.k + 1; ++m) fact *= m;
    pre = pre / GaussianRational(fact);
    if (n == 5 && s.j == 0 && s.k == 0 && s.alpha == 0) {
        // Five-dimensional convention: the established closed form drops the
        // leading -i; we follow it so the totals are comparable, and say so.
        pre = GaussianRational(1);
        r.note = "coefficient +1 (printed five-dimensional convention) in place of -i";
    }

    SymbolJet left_jet = build_symbol(detail::tag_for_power(p1), s.r, n);
    if (pert == Perturbation::LeftMultiplyF) left_jet = perturb_left_multiply_f(left_jet);
    SymbolJet right_jet = build_symbol(detail::tag_for_power(p2), s.l, n);

    PoleRational left, right;
    const bool ibp = (s.j == 0 && s.k == 0 && s.alpha == 0 && s.l == -p2 - 1);
    if (ibp) {
        // -i tr[pi+ s_r x d_xi s_l] = +i tr[d_xi pi+ s_r x s_l]: both sides are
        // computed and compared in the tests; the report carries this form.
        pre = GaussianRational(0) - pre;
        left = left_jet.value.pi_plus().diff_xi();
        right = right_jet.value;
        r.note = r.note.empty() ? "integration-by-parts form" : r.note + "; integration-by-parts form";
    } else {
        const PoleRational* lsrc = &left_jet.value;
        if (s.j == 1) {
            if (!left_jet.dxn) throw UnsupportedConfiguration("missing d_xn jet for left symbol");
            lsrc = &*left_jet.dxn;
        }
        left = lsrc->pi_plus().diff_xi(s.k);
        const PoleRational* rsrc = &right_jet.value;
        if (s.k == 1) {
            if (!right_jet.dxn) throw UnsupportedConfiguration("missing d_xn jet for right symbol");
            rsrc = &*right_jet.dxn;
        }
        right = rsrc->diff_xi(s.j + 1);
    }

    r.prefactor = pre;
    r.product = (left * right).subst_u1();
    r.trace_raw = r.product.trace(n).subst_u1();
    if (!r.trace_raw.is_scalar())
        throw RelationCheckFailed("trace integrand is not scalar in case " + r.label);
    r.integrand_trace = r.trace_raw.scaled(pre);
    LineIntegral li = r.integrand_trace.integrate_line();
    r.integral = li.coeff.coeff(M_1);
    return r;
}

inline PhiReport phi(int n, int p1, int p2, Perturbation pert = Perturbation::None) {
    PhiReport rep;
    rep.n = n;
    rep.p1 = p1;
    rep.p2 = p2;
    rep.perturb = pert;
    rep.multiplier = {1, n - 2};
    for (const CaseSpec& s : enumerate_cases(n, p1, p2)) {
        CaseResult c = eval_case(s, n, p1, p2, pert);
        c.paper_value = reference_value(n, p1, p2, pert, c.label);
        if (c.paper_value) {
            c.match = (c.integral == *c.paper_value);
            if (!*c.match)
                rep.mismatches.push_back(
                    {c.label, c.integral, *c.paper_value, c.integral - *c.paper_value});
        }
        rep.total += c.integral;
        rep.cases.push_back(std::move(c));
    }
    rep.paper_total = reference_value(n, p1, p2, pert, "", /*total=*/true);
    if (rep.paper_total) {
        rep.total_match = (rep.total == *rep.paper_total);
        if (!*rep.total_match)
            rep.mismatches.push_back(
                {"total", rep.total, *rep.paper_total, rep.total - *rep.paper_total});
    }
    if (p1 == 2 && p2 == 2) {
        ScalarPoly bc;
        for (const auto& c : rep.cases)
            if (c.label == "b" || c.label == "c") bc += c.integral;
        rep.bc_sum = bc;
        rep.bc_sum_zero = bc.is_zero();
    }
    return rep;
}

// Assembly of the boundary term against the extrinsic curvature K(x0) and
// the exact proportionality identities of the gravitational-action report.
struct GravityReport {
    int n = 6;
    GaussianRational K_coeff;                       // K(x0) = K_coeff * kappa
    std::optional<GaussianRational> boundary_coeff; // total = boundary_coeff * K_coeff^-1-normalized, see below
    std::optional<GaussianRational> reference_boundary_coeff;
    bool assembly_identity = false;   // n=6: (7i/8 - 3/8)(-5/2) = 15/16 - 35i/16
    bool corollary_identity = false;  // n=6: 16/(7i-3) * (7i/8 - 3/8) = 2
    bool theorem_n5_identity = false; // n=5: (16i/3)(3i/4) = -4
    std::string interior_note;
};

inline GravityReport gravity_report(const PhiReport& rep) {
    using GR = GaussianRational;
    GravityReport g;
    g.n = rep.n;
    g.K_coeff = (rep.n == 6) ? GR::frac(-5, 2) : GR(-2);

    // If the total is c*kappa, rewrite it as (c/K_coeff) * pi*Omega * K(x0).
    Expo ek;
    ek[Sym::kappa] = 1;
    if (rep.total.terms().size() == 1 && rep.total.terms().begin()->first == ek)
        g.boundary_coeff = rep.total.terms().begin()->second / g.K_coeff;

    if (rep.n == 6) {
        g.reference_boundary_coeff = GR::make(-3, 8, 7, 8);
        g.assembly_identity =
            (*g.reference_boundary_coeff * GR::frac(-5, 2) == GR::make(15, 16, -35, 16));
        g.corollary_identity =
            (GR(16) / GR::make(-3, 1, 7, 1) * *g.reference_boundary_coeff == GR(2));
        g.interior_note =
            "interior term: -(5/3) Omega_5 * integral of the scalar curvature "
            "(documented constant, not computed here)";
    } else {
        g.theorem_n5_identity = (GR::make(0, 1, 16, 3) * GR::make(0, 1, 3, 4) == GR(-4));
        g.interior_note = "boundary-only regime: no interior term at this order";
    }
    if (rep.perturb == Perturbation::LeftMultiplyF)
        g.interior_note =
            "interior term: -(5/3) Omega_5 * integral of f times the scalar curvature "
            "(documented constant, not computed here)";
    return g;
}

} // namespace kkw
