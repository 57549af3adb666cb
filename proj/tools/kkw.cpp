// Command-line front end: exact boundary-term computation, verification
// against the reference tables, numeric cross-checks, and a small evaluator
// for the underlying algebra.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kkw/oracle.hpp"
#include "kkw/parser.hpp"
#include "kkw/report_io.hpp"

using namespace kkw;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
}

struct CommonOpts {
    int n = 6;
    std::string p = "1,3";
    std::string perturb = "none";
    std::string format = "json";
    std::string out;
    unsigned seed = 7;
    double tol = 1e-8;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_format = true) {
    cmd->add_option("--n", o.n, "dimension (5 or 6)");
    cmd->add_option("--p", o.p, "inverse powers, comma-separated (e.g. 1,3)");
    cmd->add_option("--perturb", o.perturb, "none | left-multiply-f");
    if (with_format) cmd->add_option("--format", o.format, "json | md");
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
    cmd->add_option("--seed", o.seed, "base RNG seed for the numeric oracle");
    cmd->add_option("--tol", o.tol, "relative tolerance for the numeric oracle");
}

std::pair<int, int> parse_p(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--p", "expected two powers, e.g. 1,3");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

Perturbation parse_perturb(const std::string& s) {
    if (s == "none") return Perturbation::None;
    if (s == "left-multiply-f") return Perturbation::LeftMultiplyF;
    throw CLI::ValidationError("--perturb", "expected none or left-multiply-f");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact boundary-term engine for Dirac-type symbol calculus"};
    app.require_subcommand(1);

    CommonOpts phi_o, case_o, verify_o, report_o, eval_o;
    std::string case_label, eval_text;

    CLI::App* c_phi = app.add_subcommand("phi", "compute the full boundary-term sum");
    add_common(c_phi, phi_o);
    CLI::App* c_case = app.add_subcommand("case", "compute a single labelled case");
    add_common(c_case, case_o);
    c_case->add_option("--label", case_label, "case label (aI, aII, aIII, b, c, a)")->required();
    CLI::App* c_verify = app.add_subcommand("verify", "run symbol, engine and oracle verifications");
    add_common(c_verify, verify_o, /*with_format=*/false);
    bool verify_all = false;
    c_verify->add_flag("--all", verify_all, "verify every supported configuration");
    CLI::App* c_report = app.add_subcommand("report", "markdown report with gravitational assembly");
    add_common(c_report, report_o);
    CLI::App* c_eval = app.add_subcommand("eval", "evaluate an expression in the exact algebra");
    c_eval->add_option("expr", eval_text, "expression text")->required();
    c_eval->add_option("--n", eval_o.n, "dimension used by tr()");
    CLI::App* c_self = app.add_subcommand("selftest", "quick internal consistency sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (c_phi->parsed() || c_case->parsed() || c_report->parsed()) {
            CommonOpts& o = c_phi->parsed() ? phi_o : c_case->parsed() ? case_o : report_o;
            auto [p1, p2] = parse_p(o.p);
            PhiReport rep = phi(o.n, p1, p2, parse_perturb(o.perturb));
            if (c_case->parsed()) {
                const CaseResult* found = nullptr;
                for (const auto& c : rep.cases)
                    if (c.label == case_label) found = &c;
                if (!found) {
                    std::cerr << "no case labelled '" << case_label << "' in this configuration\n";
                    return 1;
                }
                if (o.format == "md") {
                    std::ostringstream os;
                    os << "case " << found->label << ": "
                       << (found->vanished ? "0 (vanishes)" : value_str(found->integral, found->multiplier))
                       << "\n";
                    emit(os.str(), o.out);
                } else {
                    emit(case_json(*found).dump(2), o.out);
                }
                return (found->match && !*found->match) ? 2 : 0;
            }
            if (c_report->parsed()) {
                GravityReport g = gravity_report(rep);
                emit(gravity_markdown(rep, g), o.out);
            } else {
                emit(o.format == "md" ? phi_markdown(rep) : phi_json(rep).dump(2), o.out);
            }
            return rep.all_match() ? 0 : 2;
        }

        if (c_verify->parsed()) {
            bool ok = true, matches_reference = true;
            std::ostringstream os;
            auto line = [&](const std::string& name, bool pass, const std::string& detail = "") {
                os << (pass ? "[ok]   " : "[FAIL] ") << name;
                if (!detail.empty()) os << " -- " << detail;
                os << "\n";
                ok = ok && pass;
            };
            Verdict v1 = verify_inverse_leading(verify_o.n == 5 ? 5 : 6);
            line("inverse leading-order identity", v1.pass, v1.detail);
            auto q4 = verify_q_minus4(6);
            line("subleading inverse recursion + parametrix identity", q4.pass, q4.detail);
            auto fi = verify_f_independence();
            line("perturbed inverse f-independence at orders -2,-3", fi.pass());
            auto q6 = f_dependent_q6();
            line("f-dependent depth-6 term and sphere-trace control", q6.interior_coefficient_consistent);
            std::vector<std::tuple<int, int, int, Perturbation>> configs;
            if (verify_all) {
                configs = {{6, 1, 3, Perturbation::None},
                           {5, 1, 3, Perturbation::None},
                           {6, 2, 2, Perturbation::None},
                           {6, 2, 2, Perturbation::LeftMultiplyF}};
            } else {
                auto [p1, p2] = parse_p(verify_o.p);
                configs = {{verify_o.n, p1, p2, parse_perturb(verify_o.perturb)}};
            }
            for (auto [n, p1, p2, pert] : configs) {
                PhiReport rep = phi(n, p1, p2, pert);
                std::string name = "phi(" + std::to_string(n) + "," + std::to_string(p1) + "," +
                                   std::to_string(p2) + "," + perturbation_name(pert) + ")";
                if (!rep.all_match()) matches_reference = false;
                os << (rep.all_match() ? "[ok]   " : "[DIFF] ") << name
                   << " vs reference tables\n";
                OracleReport orc = crosscheck_phi(n, p1, p2, pert, verify_o.tol);
                line(name + " numeric oracle", orc.pass,
                     "total_rel_err=" + std::to_string(orc.total_rel_err));
            }
            emit(os.str(), verify_o.out);
            if (!ok) return 1;
            return matches_reference ? 0 : 2;
        }

        if (c_eval->parsed()) {
            ExprValue v = parse_expr(eval_text, eval_o.n);
            std::cout << render(v) << "\n";
            return 0;
        }

        if (c_self->parsed()) {
            // cheap exact sweep: every supported configuration + algebra goldens
            bool ok = true;
            auto expect = [&](bool c, const std::string& name) {
                std::cout << (c ? "[ok]   " : "[FAIL] ") << name << "\n";
                ok = ok && c;
            };
            expect(parse_expr("tr(P*A)", 6).val == PoleRational(-(ScalarPoly::kappa() * ScalarPoly::u() * ScalarPoly(4))),
                   "trace golden tr(P*A)");
            expect(render(parse_expr("int((2*i-6*xi)/((xi-i)^3*(xi+i)^3))")) == "(((3/4*i)))*pi",
                   "contour-integral golden");
            expect(verify_inverse_leading(6).pass, "inverse leading identity");
            expect(verify_q_minus4(6).pass, "subleading recursion identity");
            PhiReport r6 = phi(6, 1, 3);
            expect(r6.total == ScalarPoly(GaussianRational::frac(-5, 4)) * ScalarPoly::kappa(),
                   "phi(6,1,3) total");
            PhiReport r5 = phi(5, 1, 3);
            expect(r5.total == ScalarPoly(GaussianRational::make(0, 1, 3, 4)), "phi(5,1,3) total");
            PhiReport r22 = phi(6, 2, 2, Perturbation::LeftMultiplyF);
            expect(r22.bc_sum_zero.value_or(false), "phi(6,2,2,f) b+c cancellation");
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
