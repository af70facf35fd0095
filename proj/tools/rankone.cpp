// Command-line surface for the rank-one restriction library: exact
// dimensions, zonal function values, unitarity constants, restriction
// norms, and boundedness-criterion sweeps, emitted as CSV or JSON tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rankone/branching.hpp"
#include "rankone/criterion.hpp"
#include "rankone/output.hpp"
#include "rankone/spherical.hpp"
#include "rankone/unitarity.hpp"
#include "rankone/verify.hpp"
#include "rankone/weyl.hpp"

namespace {

using namespace rankone;

constexpr int kExitInvalidType = 2;
constexpr int kExitNoRegime = 3;

struct CliError {
    int code;
    std::string message;
};

Family parse_family(const std::string& s) {
    if (s == "R") return Family::Real;
    if (s == "C") return Family::Complex;
    if (s == "H") return Family::Quaternion;
    if (s == "F4") return Family::Octonion;
    throw CliError{kExitInvalidType,
                   "unknown family '" + s + "' (expected R, C, H, or F4)"};
}

GroupFamily make_group(const std::string& fam, int n) {
    Family f = parse_family(fam);
    GroupFamily g{f, f == Family::Octonion ? 0 : n};
    if (!g.valid())
        throw CliError{kExitInvalidType,
                       std::string("invalid rank parameter n for family ") +
                           family_name(f)};
    return g;
}

std::pair<int, int> parse_index_pair(const std::string& s, const char* what) {
    std::istringstream in(s);
    int a = 0, b = 0;
    char comma = 0;
    if (!(in >> a))
        throw CliError{kExitInvalidType, std::string(what) + ": cannot parse '" + s + "'"};
    if (in >> comma) {
        if (comma != ',' || !(in >> b))
            throw CliError{kExitInvalidType,
                           std::string(what) + ": cannot parse '" + s + "'"};
    }
    return {a, b};
}

KType parse_tau(const GroupFamily& g, const std::string& s) {
    auto [p, q] = parse_index_pair(s, "tau");
    KType tau{p, q};
    if (!ktype_valid(g, tau)) {
        std::string why;
        switch (g.kind) {
            case Family::Real: why = "requires p >= 0"; break;
            case Family::Complex: why = "requires p, q >= 0"; break;
            case Family::Quaternion:
            case Family::Octonion:
                why = "requires p >= q >= 0 with p - q even";
                break;
        }
        throw CliError{kExitInvalidType, "invalid K-type (" + s + "): " + why};
    }
    return tau;
}

LType parse_sigma(const GroupFamily& g, const std::string& s) {
    auto [a, b] = parse_index_pair(s, "sigma");
    LType sigma{a, b};
    if (!ltype_valid(g, sigma)) {
        std::string why;
        switch (g.kind) {
            case Family::Real: why = "requires s >= 0"; break;
            case Family::Complex: why = "requires s, t >= 0"; break;
            case Family::Quaternion:
                why = "requires s >= t >= 0 with s - t even";
                break;
            case Family::Octonion: why = "requires q >= 0, t = 0"; break;
        }
        throw CliError{kExitInvalidType, "invalid L-type (" + s + "): " + why};
    }
    return sigma;
}

/// --regime inferred from nu, or forced: "complementary" | "quotient:k".
NuParameter resolve_nu(const GroupFamily& g, const std::string& nu_str,
                       const std::string& regime) {
    try {
        if (regime.rfind("quotient:", 0) == 0) {
            int k = std::stoi(regime.substr(9));
            return NuParameter::quotient(g.kind, k);
        }
        Rational nu = parse_rational(nu_str);
        if (regime == "complementary") {
            if (!complementary_range(g).contains(nu))
                throw std::domain_error(
                    "nu lies outside the complementary range");
            return NuParameter::complementary(nu);
        }
        if (!regime.empty())
            throw CliError{kExitInvalidType,
                           "unknown --regime '" + regime +
                               "' (expected complementary or quotient:k)"};
        return classify_nu(g, nu);
    } catch (const std::domain_error& e) {
        throw CliError{kExitNoRegime, e.what()};
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitNoRegime, e.what()};
    }
}

void emit(const OutputRecord& rec, const std::string& format,
          const std::string& out_path) {
    if (out_path.empty()) {
        write_record(std::cout, rec, format);
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw CliError{1, "cannot open output file: " + out_path};
    write_record(os, rec, format);
}

std::string command_echo(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += ' ';
        s += p;
    }
    return s;
}

int default_jobs() {
    if (const char* env = std::getenv("RANKONE_BRANCH_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// ---------------------------------------------------------------------------

struct CommonFlags {
    std::string family;
    int n = 2;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& c, bool needs_family = true) {
    if (needs_family)
        cmd->add_option("--family", c.family, "family: R, C, H, or F4")
            ->required();
    cmd->add_option("--n", c.n, "rank parameter (ignored for F4)");
    cmd->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out, "output file (default stdout)");
}

int run(int argc, char** argv) {
    CLI::App app{"rank-one restriction tables"};
    app.require_subcommand(1);

    CommonFlags c;
    std::string tau_str, sigma_str, nu_str, regime, point_str, suite = "all";
    bool oracle = false;
    unsigned nodes = 96;
    long p_max = 1000;
    int sigma_max = 50;
    int jobs = default_jobs();

    auto* cmd_dim = app.add_subcommand("dim", "exact K-type dimension");
    add_common(cmd_dim, c);
    cmd_dim->add_option("--tau", tau_str, "K-type indices p[,q]")->required();

    auto* cmd_phi = app.add_subcommand("phi", "zonal function value");
    add_common(cmd_phi, c);
    cmd_phi->add_option("--tau", tau_str, "K-type indices p[,q]")->required();
    cmd_phi->add_option("--point", point_str, "evaluation point a[,b]")
        ->required();

    auto* cmd_lambda = app.add_subcommand("lambda", "unitarity constant");
    add_common(cmd_lambda, c);
    cmd_lambda->add_option("--tau", tau_str, "K-type indices p[,q]")->required();
    cmd_lambda->add_option("--nu", nu_str, "parameter nu as rational a/b");
    cmd_lambda->add_option("--regime", regime,
                           "complementary or quotient:k (default inferred)");

    auto* cmd_rnorm = app.add_subcommand("rnorm", "restriction norm squared");
    add_common(cmd_rnorm, c);
    cmd_rnorm->add_option("--tau", tau_str, "K-type indices p[,q]")->required();
    cmd_rnorm->add_option("--sigma", sigma_str, "L-type indices s[,t]")
        ->required();
    cmd_rnorm->add_flag("--oracle", oracle, "also compute the quadrature oracle");
    cmd_rnorm->add_option("--nodes", nodes, "quadrature nodes");

    auto* cmd_crit = app.add_subcommand("criterion", "per-sigma criterion sum");
    add_common(cmd_crit, c);
    cmd_crit->add_option("--sigma", sigma_str, "L-type indices s[,t]")
        ->required();
    cmd_crit->add_option("--nu", nu_str, "parameter nu as rational a/b");
    cmd_crit->add_option("--regime", regime,
                         "complementary or quotient:k (default inferred)");
    cmd_crit->add_option("--p-max", p_max, "truncation in the leading index");

    auto* cmd_sweep = app.add_subcommand("sweep", "sigma sweep with verdict");
    add_common(cmd_sweep, c);
    cmd_sweep->add_option("--nu", nu_str, "parameter nu as rational a/b");
    cmd_sweep->add_option("--regime", regime,
                          "complementary or quotient:k (default inferred)");
    cmd_sweep->add_option("--sigma-max", sigma_max, "largest sigma leading index");
    cmd_sweep->add_option("--p-max", p_max, "truncation in the leading index");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");

    auto* cmd_verify = app.add_subcommand("verify", "run an invariant suite");
    add_common(cmd_verify, c, /*needs_family=*/false);
    cmd_verify->add_option(
        "--suite", suite,
        "schur|gegenbauer|jacobi|ratio|lemma35|dims|all (default all)");

    CLI11_PARSE(app, argc, argv);

    if (*cmd_dim) {
        GroupFamily g = make_group(c.family, c.n);
        KType tau = parse_tau(g, tau_str);
        OutputRecord rec;
        rec.command = command_echo({"dim", c.family, tau_str});
        rec.columns = {"family", "n", "p", "q", "dim"};
        rec.add_row({c.family, fmt_long(g.n), fmt_long(tau.p), fmt_long(tau.q),
                     fmt_rational(ktype_dim(g, tau))});
        emit(rec, c.format, c.out);
        return 0;
    }

    if (*cmd_phi) {
        GroupFamily g = make_group(c.family, c.n);
        KType tau = parse_tau(g, tau_str);
        SphericalPoint pt{};
        {
            std::istringstream in(point_str);
            char comma;
            if (!(in >> pt.a))
                throw CliError{kExitInvalidType,
                               "point: cannot parse '" + point_str + "'"};
            if (in >> comma) in >> pt.b;
        }
        BoundedValue v = phi_eval(g, tau, pt);
        OutputRecord rec;
        rec.command = command_echo({"phi", c.family, tau_str, point_str});
        rec.columns = {"family", "n", "p", "q", "a", "b", "value", "radius"};
        rec.add_row({c.family, fmt_long(g.n), fmt_long(tau.p), fmt_long(tau.q),
                     fmt_double(pt.a), fmt_double(pt.b), fmt_double(v.value),
                     fmt_double(v.radius)});
        emit(rec, c.format, c.out);
        return 0;
    }

    if (*cmd_lambda) {
        GroupFamily g = make_group(c.family, c.n);
        KType tau = parse_tau(g, tau_str);
        NuParameter nup = resolve_nu(g, nu_str, regime);
        std::string value;
        if (nup.regime == Regime::complementary) {
            value = fmt_rational(lambda_nu_exact(g, nup.value, tau));
        } else if (in_quotient_kernel(g.kind, nup.k, tau)) {
            value = "kernel";
        } else if (g.kind == Family::Complex && nup.k == 0) {
            value = fmt_rational(quotient_lambda_zero(g, tau));
        } else {
            value = fmt_rational(quotient_lambda(g, nup.k, tau));
        }
        OutputRecord rec;
        rec.command = command_echo({"lambda", c.family, nu_str, tau_str});
        rec.columns = {"family", "n", "nu", "regime", "k",
                       "p",      "q", "lambda"};
        rec.add_row({c.family, fmt_long(g.n), fmt_rational(nup.value),
                     nup.regime == Regime::complementary ? "complementary"
                                                         : "quotient",
                     fmt_long(nup.k), fmt_long(tau.p), fmt_long(tau.q), value});
        emit(rec, c.format, c.out);
        return 0;
    }

    if (*cmd_rnorm) {
        GroupFamily g = make_group(c.family, c.n);
        KType tau = parse_tau(g, tau_str);
        LType sigma = parse_sigma(g, sigma_str);
        bool adm = branch_admissible(g.kind, tau, sigma);
        BoundedValue closed = restriction_norm_sq_closed(g, tau, sigma);
        OutputRecord rec;
        rec.command = command_echo({"rnorm", c.family, tau_str, sigma_str});
        rec.columns = {"family", "n", "p", "q", "s", "t", "admissible",
                       "closed"};
        std::vector<std::string> row = {
            c.family,        fmt_long(g.n),     fmt_long(tau.p),
            fmt_long(tau.q), fmt_long(sigma.s), fmt_long(sigma.t),
            fmt_bool(adm),   fmt_double(closed.value)};
        if (oracle) {
            rec.columns.push_back("oracle");
            rec.columns.push_back("ratio");
            BoundedValue orc = restriction_norm_sq_oracle(g, tau, sigma, nodes);
            row.push_back(fmt_double(orc.value));
            row.push_back(fmt_double(orc.value != 0.0
                                         ? closed.value / orc.value
                                         : 0.0));
        }
        rec.add_row(std::move(row));
        emit(rec, c.format, c.out);
        return 0;
    }

    if (*cmd_crit) {
        GroupFamily g = make_group(c.family, c.n);
        LType sigma = parse_sigma(g, sigma_str);
        NuParameter nup = resolve_nu(g, nu_str, regime);
        CriterionReport rep = criterion_sum(g, nup, sigma, p_max);
        OutputRecord rec;
        rec.command = command_echo({"criterion", c.family, nu_str, sigma_str});
        rec.columns = {"family", "n",    "nu",          "s",
                       "t",      "partial_sum", "tail_estimate", "ratio",
                       "gamma_fit", "diverged"};
        rec.add_row({c.family, fmt_long(g.n), fmt_rational(nup.value),
                     fmt_long(sigma.s), fmt_long(sigma.t),
                     fmt_double(rep.partial_sum.value), fmt_double(rep.tail_estimate),
                     fmt_double(rep.ratio), fmt_double(rep.gamma_fit),
                     fmt_bool(rep.diverged)});
        emit(rec, c.format, c.out);
        return 0;
    }

    if (*cmd_sweep) {
        GroupFamily g = make_group(c.family, c.n);
        NuParameter nup = resolve_nu(g, nu_str, regime);
        SweepReport sw = boundedness_sweep(g, nup, sigma_max, p_max, jobs);
        OutputRecord rec;
        rec.command = command_echo({"sweep", c.family, nu_str});
        rec.columns = {"kind", "s", "t", "partial_sum", "tail_estimate",
                       "ratio", "gamma_fit", "diverged", "error",
                       "sup_ratio", "growth_exponent", "growth_stderr",
                       "plateau_drift", "verdict"};
        for (const CriterionReport& r : sw.reports)
            rec.add_row({"sigma", fmt_long(r.sigma.s), fmt_long(r.sigma.t),
                         fmt_double(r.partial_sum.value), fmt_double(r.tail_estimate),
                         fmt_double(r.ratio), fmt_double(r.gamma_fit),
                         fmt_bool(r.diverged), r.message, "", "", "", "", ""});
        rec.add_row({"summary", "", "", "", "", "", "", "", "",
                     fmt_double(sw.sup_ratio), fmt_double(sw.growth_exponent),
                     fmt_double(sw.growth_stderr), fmt_double(sw.plateau_drift),
                     verdict_name(sw.verdict)});
        emit(rec, c.format, c.out);
        return 0;
    }

    if (*cmd_verify) {
        auto results = verify::run_suite(suite);
        OutputRecord rec;
        rec.command = command_echo({"verify", suite});
        rec.columns = {"name", "pass", "measured", "tolerance", "detail"};
        bool all = true;
        for (const PropertyResult& r : results) {
            rec.add_row({r.name, fmt_bool(r.pass), fmt_double(r.measured),
                         fmt_double(r.tolerance), r.detail});
            all = all && r.pass;
        }
        emit(rec, c.format, c.out);
        return all ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidType;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
