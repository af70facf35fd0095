#ifndef RANKONE_VERIFY_HPP
#define RANKONE_VERIFY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "rankone/branching.hpp"
#include "rankone/criterion.hpp"
#include "rankone/spherical.hpp"
#include "rankone/unitarity.hpp"
#include "rankone/output.hpp"
#include "rankone/weyl.hpp"

namespace rankone {

struct PropertyResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst observed deviation / spread
    double tolerance = 0.0;  // the bound it was held to (0 = exact)
    std::string detail;
};

namespace verify {

// ---------------------------------------------------------------------------
// schur: quadrature ||phi_tau||^2 * dim(W^tau) = 1
// ---------------------------------------------------------------------------

inline PropertyResult schur_one(const GroupFamily& g, int p_max, int q_max,
                                unsigned nodes, double tol) {
    PropertyResult r;
    r.name = std::string("schur/") + family_name(g.kind) +
             (g.kind == Family::Octonion ? "" : "-n" + std::to_string(g.n));
    r.tolerance = tol;
    double worst = 0.0;
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= q_max; ++q) {
            if (!ktype_valid(g, {p, q})) continue;
            double nd = phi_norm_sq_oracle(g, {p, q}, nodes).value;
            double dim = to_double(ktype_dim(g, {p, q}));
            worst = std::max(worst, std::abs(nd * dim - 1.0));
        }
    r.measured = worst;
    r.pass = worst < tol;
    return r;
}

inline std::vector<PropertyResult> suite_schur() {
    std::vector<PropertyResult> out;
    for (int n = 3; n <= 6; ++n)
        out.push_back(schur_one(GroupFamily::real(n), 15, 0, 96, 1e-9));
    for (int n = 2; n <= 4; ++n)
        out.push_back(schur_one(GroupFamily::complex(n), 8, 8, 96, 1e-9));
    for (int n = 1; n <= 3; ++n)
        out.push_back(schur_one(GroupFamily::quaternion(n), 10, 10, 96, 1e-9));
    out.push_back(schur_one(GroupFamily::octonion(), 8, 8, 96, 1e-9));
    return out;
}

// ---------------------------------------------------------------------------
// gegenbauer: phi_p^n(t) = P_p^{(a,a)}(t)/P_p^{(a,a)}(1), a = (n-3)/2
// (the normalized ultraspherical polynomial)
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> suite_gegenbauer() {
    PropertyResult r;
    r.name = "gegenbauer/real-profile";
    r.tolerance = 1e-12;
    double worst = 0.0;
    for (int n = 3; n <= 8; ++n) {
        Rational a(n - 3, 2);
        for (int p = 0; p <= 20; ++p) {
            double p1 = jacobi_poly(static_cast<unsigned>(p), a, a, 1.0).value;
            for (int i = 0; i <= 20; ++i) {
                double t = -1.0 + 0.1 * i;
                double lhs = phi_real_profile(n, p, t).value;
                double rhs =
                    jacobi_poly(static_cast<unsigned>(p), a, a, t).value / p1;
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    r.measured = worst;
    r.pass = worst < r.tolerance;
    return {r};
}

// ---------------------------------------------------------------------------
// jacobi: quaternion phi_{k,0}^n agrees with the Jacobi-polynomial identity
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> suite_jacobi() {
    // Exact-rational cross-evaluation of the two formulas for phi_{k,0}^n:
    // the terminating hypergeometric series against the Jacobi polynomial
    // identity.  Exact agreement implies any float tolerance.
    PropertyResult r;
    r.name = "jacobi/quaternion-k0";
    r.tolerance = 1e-12;
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= 20; ++k)
            for (int i = 0; i <= 20; ++i) {
                Rational x(i, 20);
                unsigned uk = static_cast<unsigned>(k);
                Rational lhs = phi_hyp_series_exact(
                    uk, Rational(-(2 * k + 2), 2), Rational(2 * (n - 1)),
                    2 * k, x, 1 - x * x);
                Rational rhs = pochhammer(1, uk) /
                               pochhammer(Rational(2 * n - 2), uk) *
                               jacobi_poly_exact(uk, Rational(2 * n - 3), 1,
                                                 2 * x * x - 1);
                worst = std::max(worst, std::abs(to_double(lhs - rhs)));
            }
    r.measured = worst;
    r.pass = worst < r.tolerance;
    return {r};
}

// ---------------------------------------------------------------------------
// ratio: closed-form / oracle restriction norm is one constant per (family,n)
// ---------------------------------------------------------------------------

inline PropertyResult ratio_one(const GroupFamily& g, int p_max, int q_max,
                                unsigned nodes) {
    PropertyResult r;
    r.name = std::string("ratio/") + family_name(g.kind) +
             (g.kind == Family::Octonion ? "" : "-n" + std::to_string(g.n));
    r.tolerance = 1e-7;
    double lo = 0, hi = 0;
    bool first = true;
    for (int p = 0; p <= p_max; ++p)
        for (int q = 0; q <= q_max; ++q) {
            if (!ktype_valid(g, {p, q})) continue;
            for (const LType& sg : admissible_sigmas(g.kind, {p, q})) {
                double closed = restriction_norm_sq_closed(g, {p, q}, sg).value;
                double oracle =
                    restriction_norm_sq_oracle(g, {p, q}, sg, nodes).value;
                double ratio = closed / oracle;
                if (first) { lo = hi = ratio; first = false; }
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
        }
    r.measured = (hi - lo) / hi;  // relative spread
    r.pass = r.measured < r.tolerance;
    r.detail = "constant=" + fmt_double(0.5 * (lo + hi));
    if (g.kind == Family::Complex) {
        double want = g.n - 1.0;
        double err = std::max(std::abs(lo - want), std::abs(hi - want));
        r.detail += " expected=" + std::to_string(g.n - 1);
        r.pass = r.pass && err < 1e-9;
        r.measured = std::max(r.measured, err);
    }
    return r;
}

inline std::vector<PropertyResult> suite_ratio() {
    std::vector<PropertyResult> out;
    for (int n = 3; n <= 6; ++n)
        out.push_back(ratio_one(GroupFamily::real(n), 25, 0, 64));
    for (int n = 2; n <= 4; ++n)
        out.push_back(ratio_one(GroupFamily::complex(n), 25, 6, 64));
    // n = 1 has no lower-rank subgroup to restrict to, so no ratio law there
    for (int n = 2; n <= 3; ++n)
        out.push_back(ratio_one(GroupFamily::quaternion(n), 25, 6, 64));
    out.push_back(ratio_one(GroupFamily::octonion(), 25, 8, 64));
    return out;
}

// ---------------------------------------------------------------------------
// lemma35: stabilized double-sum suprema for valid exponents
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> suite_lemma35() {
    std::vector<PropertyResult> out;
    struct Case { double a, b, g; bool want_ab; };
    const Case cases[] = {
        {0.5, 1.0, 1.5, true},  {0.75, 0.75, 2.0, true},
        {0.25, 1.0, 3.0, true}, {0.5, 0.25, 2.0, false},
    };
    for (const Case& c : cases) {
        Lemma35Report rep = lemma35_check(c.a, c.b, c.g, 1000);
        PropertyResult r;
        char buf[96];
        std::snprintf(buf, sizeof buf, "lemma35/a=%g,b=%g,g=%g", c.a, c.b, c.g);
        r.name = buf;
        r.measured = rep.sup_alpha_beta;
        r.pass = rep.alpha_beta_stabilized == c.want_ab &&
                 (!c.want_ab || rep.gamma_stabilized);
        r.detail = c.want_ab ? "expect stabilized" : "expect non-stabilized";
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// dims: exact dimension cross-checks
// ---------------------------------------------------------------------------

inline std::vector<PropertyResult> suite_dims() {
    std::vector<PropertyResult> out;
    {
        PropertyResult r;
        r.name = "dims/spin9-spinor-16";
        r.pass = weyl_dim({RootType::B, 4},
                          HighestWeight::halves({1, 1, 1, 1})) == 16;
        out.push_back(r);
    }
    {
        PropertyResult r;
        r.name = "dims/d4-vector-8";
        r.pass = weyl_dim({RootType::D, 4}, HighestWeight::of({1, 0, 0, 0})) == 8;
        out.push_back(r);
    }
    {
        PropertyResult r;
        r.name = "dims/binomial-vs-weyl";
        r.pass = true;
        for (int n = 3; n <= 10 && r.pass; ++n)
            for (int p = 0; p <= 30 && r.pass; ++p) {
                int rank = n / 2;
                std::vector<long> w(rank, 0);
                w[0] = p;
                RootSystem rs{n % 2 ? RootType::B : RootType::D, rank};
                if (weyl_dim(rs, HighestWeight::of(w)) !=
                    Rational(harmonic_dim(n, p)))
                    r.pass = false;
            }
        out.push_back(r);
    }
    {
        PropertyResult r;
        r.name = "dims/triality";
        r.pass = true;
        for (int q = 0; q <= 30 && r.pass; ++q) {
            std::vector<long> w(4, 0);
            w[0] = q;
            Rational d1 = weyl_dim({RootType::D, 4}, HighestWeight::of(w));
            Rational d2 = weyl_dim({RootType::D, 4},
                                   HighestWeight::halves({q, q, q, q}));
            if (d1 != d2) r.pass = false;
        }
        out.push_back(r);
    }
    {
        PropertyResult r;
        r.name = "dims/so8-harmonic-product";
        r.pass = true;
        GroupFamily g = GroupFamily::octonion();
        for (int q = 0; q <= 20 && r.pass; ++q) {
            Rational want = Rational(q + 3) *
                            pochhammer(Rational(q + 1), 5) / 360;
            if (ltype_dim(g, {q, 0}) != want) r.pass = false;
        }
        out.push_back(r);
    }
    {
        PropertyResult r;
        r.name = "dims/spin9-growth";
        GroupFamily g = GroupFamily::octonion();
        auto ratio = [&](int p, int q) {
            double d = to_double(ktype_dim(g, {p, q}));
            double cmp = (p + 1.0) * std::pow((p + q + 1.0), 3) *
                         std::pow((p - q + 1.0), 3) * std::pow(q + 1.0, 6);
            return d / cmp;
        };
        // bounded above and below in p: for each fixed q the ratio at
        // p ~ 60 stays within a fixed factor of the ratio at p ~ 30
        r.pass = true;
        double worst = 1.0;
        for (int q = 0; q <= 8; ++q) {
            double drift = ratio(60 + q, q) / ratio(30 + q, q);
            worst = std::max(worst, std::max(drift, 1.0 / drift));
            if (drift < 0.25 || drift > 4.0) r.pass = false;
        }
        r.measured = worst;
        r.tolerance = 4.0;
        out.push_back(r);
    }
    return out;
}

inline std::vector<PropertyResult> run_suite(const std::string& name) {
    if (name == "schur") return suite_schur();
    if (name == "gegenbauer") return suite_gegenbauer();
    if (name == "jacobi") return suite_jacobi();
    if (name == "ratio") return suite_ratio();
    if (name == "lemma35") return suite_lemma35();
    if (name == "dims") return suite_dims();
    if (name == "all") {
        std::vector<PropertyResult> out;
        for (const char* s :
             {"schur", "gegenbauer", "jacobi", "ratio", "lemma35", "dims"}) {
            auto part = run_suite(s);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace verify

}  // namespace rankone

#endif
