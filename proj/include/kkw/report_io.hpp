#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "kkw/engine.hpp"

// JSON and markdown rendering of engine reports. Kept header-only and
// deterministic: fixed key order, exact rational coefficients as strings.

namespace kkw {

using ordered_json = nlohmann::ordered_json;

inline std::string q_str(const mpq_class& q) { return q.get_str(); }

inline ordered_json scalar_json(const ScalarPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [ex, c] : p.terms()) {
        ordered_json t;
        t["coeff"] = {{"re", q_str(c.re)}, {"im", q_str(c.im)}};
        for (int s = 0; s < 4; ++s)
            if (ex.e[s] != 0) t[sym_name(static_cast<Sym>(s))] = ex.e[s];
        terms.push_back(t);
    }
    return terms;
}

inline ordered_json value_json(const ScalarPoly& p, const Multiplier& m) {
    ordered_json v;
    if (p.terms().size() <= 1) {
        GaussianRational c;
        Expo ex;
        if (!p.terms().empty()) {
            ex = p.terms().begin()->first;
            c = p.terms().begin()->second;
        }
        v["coeff"] = {{"re", q_str(c.re)}, {"im", q_str(c.im)}};
        for (int s = 0; s < 4; ++s)
            if (ex.e[s] != 0) v[sym_name(static_cast<Sym>(s))] = ex.e[s];
    } else {
        v["terms"] = scalar_json(p);
    }
    v["pi"] = m.pi_power;
    v["omega"] = m.omega_index;
    return v;
}

inline std::string value_str(const ScalarPoly& p, const Multiplier& m) {
    if (p.is_zero()) return "0";
    return "(" + p.str() + ") * pi * Omega_" + std::to_string(m.omega_index);
}

inline ordered_json case_json(const CaseResult& c) {
    ordered_json j;
    j["label"] = c.label;
    j["spec"] = {{"r", c.spec.r}, {"l", c.spec.l}, {"j", c.spec.j},
                 {"k", c.spec.k}, {"alpha", c.spec.alpha}};
    if (c.vanished) {
        j["vanished"] = true;
        j["reason"] = c.vanish_reason;
    }
    j["integral"] = value_json(c.integral, c.multiplier);
    if (!c.note.empty()) j["note"] = c.note;
    if (c.paper_value) {
        j["reference"] = value_json(*c.paper_value, c.multiplier);
        j["match"] = *c.match;
    }
    return j;
}

inline ordered_json phi_json(const PhiReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["p"] = {r.p1, r.p2};
    j["perturb"] = perturbation_name(r.perturb);
    j["cases"] = ordered_json::array();
    for (const auto& c : r.cases) j["cases"].push_back(case_json(c));
    j["total"] = value_json(r.total, r.multiplier);
    if (r.paper_total) {
        j["reference_total"] = value_json(*r.paper_total, r.multiplier);
        j["total_match"] = *r.total_match;
    }
    if (r.bc_sum) {
        j["bc_sum"] = r.bc_sum->str();
        j["bc_sum_zero"] = *r.bc_sum_zero;
    }
    if (!r.mismatches.empty()) {
        ordered_json ms = ordered_json::array();
        for (const auto& m : r.mismatches)
            ms.push_back({{"label", m.label},
                          {"computed", m.computed.str()},
                          {"reference", m.reference.str()},
                          {"residual", m.residual.str()}});
        j["mismatches"] = ms;
    }
    return j;
}

inline std::string phi_markdown(const PhiReport& r) {
    std::ostringstream os;
    os << "# Boundary term, n=" << r.n << ", p=(" << r.p1 << "," << r.p2 << "), perturbation "
       << perturbation_name(r.perturb) << "\n\n";
    os << "| case | value | reference | match |\n|---|---|---|---|\n";
    for (const auto& c : r.cases) {
        os << "| " << c.label << " | ";
        if (c.vanished)
            os << "0 (vanishes: " << c.vanish_reason << ")";
        else
            os << value_str(c.integral, c.multiplier);
        os << " | " << (c.paper_value ? value_str(*c.paper_value, c.multiplier) : "-") << " | "
           << (c.match ? (*c.match ? "yes" : "**no**") : "-") << " |\n";
    }
    os << "| total | " << value_str(r.total, r.multiplier) << " | "
       << (r.paper_total ? value_str(*r.paper_total, r.multiplier) : "-") << " | "
       << (r.total_match ? (*r.total_match ? "yes" : "**no**") : "-") << " |\n";
    if (r.bc_sum)
        os << "\nSum of cases b and c: " << r.bc_sum->str()
           << (*r.bc_sum_zero ? " (vanishes)" : " (nonzero)") << "\n";
    if (!r.mismatches.empty()) {
        os << "\n## Mismatches against the reference tables\n\n";
        for (const auto& m : r.mismatches)
            os << "- **" << m.label << "**: computed `" << m.computed.str() << "`, reference `"
               << m.reference.str() << "`, residual `" << m.residual.str() << "`\n";
    }
    for (const auto& c : r.cases)
        if (!c.note.empty()) os << "\nNote (" << c.label << "): " << c.note << "\n";
    return os.str();
}

inline std::string gravity_markdown(const PhiReport& r, const GravityReport& g) {
    std::ostringstream os;
    os << phi_markdown(r);
    os << "\n## Gravitational assembly\n\n";
    os << "- Extrinsic curvature at the base point: K = " << g.K_coeff.str() << " * kappa\n";
    if (g.boundary_coeff)
        os << "- Boundary term rewritten against K: total = (" << g.boundary_coeff->str()
           << ") * pi * Omega_" << r.multiplier.omega_index << " * K\n";
    if (g.reference_boundary_coeff)
        os << "- Reference boundary coefficient: " << g.reference_boundary_coeff->str() << "\n";
    if (r.n == 6) {
        os << "- Assembly identity (reference coefficient times K slope equals reference total): "
           << (g.assembly_identity ? "holds" : "fails") << "\n";
        os << "- Normalization inverse identity: " << (g.corollary_identity ? "holds" : "fails")
           << "\n";
    } else {
        os << "- Five-dimensional constant identity (16i/3)*(3i/4) = -4: "
           << (g.theorem_n5_identity ? "holds" : "fails") << "\n";
    }
    os << "- " << g.interior_note << "\n";
    return os.str();
}

} // namespace kkw
