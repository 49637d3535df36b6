#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "phasebox/genfun.hpp"
#include "phasebox/schur.hpp"
#include "phasebox/serialize.hpp"
#include "phasebox/suites.hpp"

namespace {

using namespace phasebox;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::string report_text(const IdentityReport& r) {
    std::ostringstream os;
    os << r.name << ": " << (r.equal ? "equal" : "UNEQUAL");
    if (r.discrepancy)
        os << "  (at " << r.discrepancy->monomial << ": lhs=" << rat_str(r.discrepancy->lhs)
           << " rhs=" << rat_str(r.discrepancy->rhs) << ")";
    return os.str();
}

// Emits reports in the requested format; returns 1 if any report is unequal.
int emit_reports(const std::vector<IdentityReport>& reports, bool as_json) {
    int rc = 0;
    if (as_json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(identity_report_to_json(r));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) std::cout << report_text(r) << "\n";
    }
    for (const auto& r : reports)
        if (!r.equal) rc = 1;
    return rc;
}

void emit_poly(const MPoly& p, bool as_json) {
    // user-facing polynomials never carry half powers
    if (!p.has_integer_exponents())
        throw std::logic_error("emit_poly: half-integer exponent in user-facing result");
    if (as_json)
        std::cout << mpoly_to_json(p).dump() << "\n";
    else
        std::cout << to_string(p) << "\n";
}

int run_boxgf(int n, int l, int m, bool check, bool as_json) {
    VarTable vt;
    VarId q = vt.intern("q");
    if (check) {
        IdentityReport rep = verify_macmahon(&vt, q, Box{n, l, m});
        if (as_json) {
            std::cout << identity_report_to_json(rep).dump() << "\n";
        } else {
            emit_poly(rep.lhs, false);
            std::cout << report_text(rep) << "\n";
        }
        return rep.equal ? 0 : 1;
    }
    emit_poly(macmahon_box(&vt, q, Box{n, l, m}), as_json);
    return 0;
}

int run_ucgf(long max_deg, bool check, bool as_json) {
    VarTable vt;
    VarId p = vt.intern("p"), q = vt.intern("q");
    if (check) {
        IdentityReport rep = verify_uc_limit(&vt, p, q, max_deg);
        if (as_json) {
            std::cout << identity_report_to_json(rep).dump() << "\n";
        } else {
            emit_poly(rep.lhs, false);
            std::cout << report_text(rep) << "\n";
        }
        return rep.equal ? 0 : 1;
    }
    emit_poly(uc_product_truncated(&vt, p, q, max_deg).poly(), as_json);
    return 0;
}

int run_scalar(int n1, int n2, int m1, int m2, const std::string& route, bool as_json) {
    VarTable vt;
    VarSet xs, ys, zs, vs;
    for (int i = 1; i <= n1; ++i) xs.push_back(vt.intern("x" + std::to_string(i)));
    for (int i = 1; i <= n2; ++i) ys.push_back(vt.intern("y" + std::to_string(i)));
    for (int i = 1; i <= n1; ++i) zs.push_back(vt.intern("z" + std::to_string(i)));
    for (int i = 1; i <= n2; ++i) vs.push_back(vt.intern("v" + std::to_string(i)));
    if (route == "op") {
        emit_poly(scalar_product_op(&vt, m1, m2, xs, ys, zs, vs), as_json);
        return 0;
    }
    if (route == "pp") {
        emit_poly(scalar_product_pp(&vt, m1, m2, xs, ys, zs, vs), as_json);
        return 0;
    }
    if (route == "schur") {
        emit_poly(scalar_product_schur(&vt, m1, m2, xs, ys, zs, vs), as_json);
        return 0;
    }
    // route == "all": print once, assert three-way equality
    MPoly op = scalar_product_op(&vt, m1, m2, xs, ys, zs, vs);
    MPoly pp = scalar_product_pp(&vt, m1, m2, xs, ys, zs, vs);
    MPoly sc = scalar_product_schur(&vt, m1, m2, xs, ys, zs, vs);
    emit_poly(op, as_json);
    if (!(op == pp && op == sc)) {
        std::cerr << "scalar: routes disagree\n";
        return 1;
    }
    return 0;
}

int run_schur(const std::string& mu_str, int n_vars, const std::string& skew_str, bool as_json) {
    VarTable vt;
    VarSet vars;
    for (int i = 1; i <= n_vars; ++i) vars.push_back(vt.intern("x" + std::to_string(i)));
    Partition mu(parse_int_list(mu_str));
    Partition nu(parse_int_list(skew_str));
    emit_poly(skew_schur(&vt, mu, nu, vars), as_json);
    return 0;
}

int run_verify(const std::string& suite, long max_deg, bool corrupt, bool as_json) {
    std::vector<IdentityReport> reports;
    auto append = [&](std::vector<IdentityReport> more) {
        for (auto& r : more) reports.push_back(std::move(r));
    };
    bool all = suite == "all";
    if (all || suite == "macmahon") append(suites::macmahon(corrupt));
    if (all || suite == "routes") {
        append(suites::routes());
        append(suites::schur_consistency());
    }
    if (all || suite == "bb-commute") append(suites::bb_commute());
    if (all || suite == "lemma34") append(suites::lemma34());
    if (all || suite == "fock") {
        append(suites::fock_algebra());
        append(suites::heisenberg());
    }
    if (all || suite == "vertex") {
        append(suites::gamma_interlacing_equiv(4, 4));
        append(suites::gamma_commutation(std::min<long>(max_deg, 6)));
        append(suites::stabilization(4));
        append(suites::specialized_vertex(std::min<long>(max_deg, 6)));
    }
    if (all || suite == "box-columns") append(suites::box_columns(max_deg));
    if (all || suite == "uc-limit") append(suites::uc_limit(max_deg));
    int rc = emit_reports(reports, as_json);
    if (all || suite == "rtt-diagnostic") {
        suites::RttDiagnostic rep = suites::rtt_diagnostic();
        if (as_json) {
            Json j{{"name", "rtt_diagnostic"},
                   {"completed", rep.completed},
                   {"symbolic_zero", rep.symbolic_zero},
                   {"state_zero", rep.state_zero},
                   {"state_residual_entries", rep.state_residual_entries}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << rep.summary;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for boxed plane-partition generating functions "
                 "and the two-site phase model"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* boxgf = app.add_subcommand("boxgf", "Boxed plane-partition generating function");
    int bn = 1, bl = 1, bm = 1;
    bool bcheck = false;
    boxgf->add_option("--n", bn, "Box rows")->required()->check(CLI::NonNegativeNumber);
    boxgf->add_option("--l", bl, "Box columns")->required()->check(CLI::NonNegativeNumber);
    boxgf->add_option("--m", bm, "Box height")->required()->check(CLI::NonNegativeNumber);
    boxgf->add_flag("--check", bcheck, "Verify against enumeration");

    auto* ucgf = app.add_subcommand("ucgf", "Truncated pair generating function");
    long udeg = 6;
    bool ucheck = false;
    ucgf->add_option("--max-deg", udeg, "Total degree bound")->required()->check(CLI::NonNegativeNumber);
    ucgf->add_flag("--check", ucheck, "Verify against enumeration");

    auto* scalar = app.add_subcommand("scalar", "Two-site scalar product");
    int n1 = 1, n2 = 1, m1 = 1, m2 = 1;
    std::string route = "all";
    scalar->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
    scalar->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
    scalar->add_option("--m1", m1)->required()->check(CLI::PositiveNumber);
    scalar->add_option("--m2", m2)->required()->check(CLI::PositiveNumber);
    scalar->add_option("--route", route, "Computation route")
        ->check(CLI::IsMember({"op", "pp", "schur", "all"}));

    auto* schur = app.add_subcommand("schur", "(Skew) Schur polynomial");
    std::string mu_str;
    std::string skew_str;
    int n_vars = 1;
    schur->add_option("--mu", mu_str, "Partition, comma separated")->required();
    schur->add_option("--vars", n_vars, "Number of variables")->required()->check(CLI::PositiveNumber);
    schur->add_option("--skew", skew_str, "Inner partition, comma separated");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    long vdeg = 8;
    bool corrupt = false;
    verify->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember({"all", "macmahon", "routes", "bb-commute", "lemma34", "fock",
                               "vertex", "box-columns", "uc-limit", "rtt-diagnostic"}));
    verify->add_option("--max-deg", vdeg, "Degree bound for the degree-parameterized suites")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--selftest-corrupt", corrupt)->group("");  // hidden, for contract tests

    try {
        app.parse(argc, argv);
        bool as_json = format == "json";
        if (boxgf->parsed()) return run_boxgf(bn, bl, bm, bcheck, as_json);
        if (ucgf->parsed()) return run_ucgf(udeg, ucheck, as_json);
        if (scalar->parsed()) return run_scalar(n1, n2, m1, m2, route, as_json);
        if (schur->parsed()) return run_schur(mu_str, n_vars, skew_str, as_json);
        if (verify->parsed()) return run_verify(suite, vdeg, corrupt, as_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
