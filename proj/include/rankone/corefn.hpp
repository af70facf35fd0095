#ifndef RANKONE_COREFN_HPP
#define RANKONE_COREFN_HPP

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <vector>

#include "rankone/bounded.hpp"
#include "rankone/exact.hpp"

namespace rankone {

// ---------------------------------------------------------------------------
// Pochhammer symbols and Gamma ratios
// ---------------------------------------------------------------------------

/// Rising factorial (a)_m = a(a+1)...(a+m-1); exact, (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned long m) {
    Rational acc = 1;
    Rational f = a;
    for (unsigned long j = 0; j < m; ++j) {
        acc *= f;
        f += 1;
        if (acc == 0) break;
    }
    return acc;
}

// Relative accuracy budget for a single std::lgamma call.  glibc's lgamma is
// a couple of ulp; the factor 8 keeps the stated radius an honest bound.
inline constexpr double kLgammaRelErr = 8.0 * 1.1e-16;

/// Gamma(a)/Gamma(b).  Exact Pochhammer fast path when a-b is an integer,
/// log-Gamma with a propagated error radius otherwise.
inline BoundedValue gamma_ratio(const Rational& a, const Rational& b) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        throw PoleError("gamma_ratio: argument at a Gamma pole");
    Rational diff = a - b;
    if (is_integer(diff)) {
        long d = static_cast<long>(diff.get_num().get_si());
        Rational v = d >= 0 ? pochhammer(b, static_cast<unsigned long>(d))
                            : Rational(1) / pochhammer(a, static_cast<unsigned long>(-d));
        return BoundedValue::exact(v);
    }
    double la = std::lgamma(to_double(a));
    double lb = std::lgamma(to_double(b));
    // Gamma is positive for positive arguments; negative non-integer
    // arguments would need sign tracking, which no formula here produces.
    double v = std::exp(la - lb);
    double rel = (std::abs(la) + std::abs(lb) + 1.0) * kLgammaRelErr;
    return {v, std::abs(v) * rel, Rigor::rigorous};
}

inline BoundedValue gamma_ratio(HalfInteger a, HalfInteger b) {
    return gamma_ratio(a.to_rational(), b.to_rational());
}

/// Exact value of Gamma at a positive integer or half-integer, represented
/// as r * pi^(k/2):  Gamma(m) = (m-1)!,  Gamma(m+1/2) = (1/2)_m sqrt(pi).
struct PiScaled {
    Rational r = 1;
    int half_pi_pow = 0;  // power of sqrt(pi)

    PiScaled operator*(const PiScaled& o) const {
        return {r * o.r, half_pi_pow + o.half_pi_pow};
    }
    PiScaled operator/(const PiScaled& o) const {
        return {r / o.r, half_pi_pow - o.half_pi_pow};
    }
    PiScaled operator*(const Rational& c) const { return {r * c, half_pi_pow}; }
    double value() const {
        return to_double(r) * std::pow(M_PI, 0.5 * half_pi_pow);
    }
};

inline PiScaled gamma_exact(HalfInteger a) {
    if (a.twice <= 0) throw PoleError("gamma_exact: nonpositive argument");
    if (a.is_whole()) {
        unsigned long m = static_cast<unsigned long>(a.twice / 2);
        return {pochhammer(1, m - 1), 0};
    }
    unsigned long m = static_cast<unsigned long>((a.twice - 1) / 2);
    return {pochhammer(Rational(1, 2), m), 1};
}

// ---------------------------------------------------------------------------
// Terminating Gauss hypergeometric series
// ---------------------------------------------------------------------------

/// Exact coefficients of F(-m, b; c; x) = sum_j coef[j] x^j.
inline std::vector<Rational> hyp2f1_coeffs(unsigned m, const Rational& b,
                                           const Rational& c) {
    std::vector<Rational> coef(m + 1);
    coef[0] = 1;
    Rational cur = 1;
    for (unsigned j = 0; j < m; ++j) {
        Rational cj = c + static_cast<long>(j);
        if (cj == 0)
            throw PoleError("hyp2f1_terminating: (c)_j vanishes before termination");
        long a_j = -static_cast<long>(m) + static_cast<long>(j);
        cur *= Rational(a_j) * (b + static_cast<long>(j));
        cur /= cj * Rational(static_cast<long>(j) + 1);
        coef[j + 1] = cur;
    }
    return coef;
}

/// F(-m, b; c; x) evaluated by exact-rational coefficient accumulation
/// followed by one float substitution.
inline BoundedValue hyp2f1_terminating(unsigned m, const Rational& b,
                                       const Rational& c, double x) {
    auto coef = hyp2f1_coeffs(m, b, c);
    double sum = 0.0, absum = 0.0, xp = 1.0;
    for (unsigned j = 0; j <= m; ++j) {
        double term = to_double(coef[j]) * xp;
        sum += term;
        absum += std::abs(term);
        xp *= x;
    }
    return {sum, (m + 2) * 1.1e-16 * absum, Rigor::rigorous};
}

inline Rational hyp2f1_terminating_exact(unsigned m, const Rational& b,
                                         const Rational& c, const Rational& x) {
    auto coef = hyp2f1_coeffs(m, b, c);
    Rational sum = 0, xp = 1;
    for (unsigned j = 0; j <= m; ++j) {
        sum += coef[j] * xp;
        xp *= x;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Jacobi polynomials
// ---------------------------------------------------------------------------

/// P_k^{(alpha,beta)}(t) by the standard three-term recurrence.
inline BoundedValue jacobi_poly(unsigned k, const Rational& alpha,
                                const Rational& beta, double t) {
    double a = to_double(alpha), b = to_double(beta);
    if (k == 0) return BoundedValue::exact(1.0);
    double pm1 = 1.0;
    double p = 0.5 * ((a + b + 2) * t + (a - b));
    double maxabs = std::max(1.0, std::abs(p));
    for (unsigned q = 2; q <= k; ++q) {
        double apb = a + b;
        double c1 = 2 * q * (q + apb) * (2 * q + apb - 2);
        double c2 = (2 * q + apb - 1) * (apb * (a - b));
        double c3 = (2 * q + apb - 2) * (2 * q + apb - 1) * (2 * q + apb);
        double c4 = 2 * (q + a - 1) * (q + b - 1) * (2 * q + apb);
        double next = ((c2 + c3 * t) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
        maxabs = std::max(maxabs, std::abs(p));
    }
    return {p, 4.0 * k * 1.1e-16 * maxabs, Rigor::heuristic};
}

inline Rational jacobi_poly_exact(unsigned k, const Rational& alpha,
                                  const Rational& beta, const Rational& t) {
    if (k == 0) return 1;
    Rational pm1 = 1;
    Rational p = ((alpha + beta + 2) * t + (alpha - beta)) / 2;
    for (unsigned q = 2; q <= k; ++q) {
        Rational apb = alpha + beta;
        long ql = static_cast<long>(q);
        Rational c1 = Rational(2 * ql) * (ql + apb) * (2 * ql + apb - 2);
        Rational c2 = (2 * ql + apb - 1) * (apb * (alpha - beta));
        Rational c3 = (2 * ql + apb - 2) * (2 * ql + apb - 1) * (2 * ql + apb);
        Rational c4 = Rational(2) * (ql + alpha - 1) * (ql + beta - 1) * (2 * ql + apb);
        Rational next = ((c2 + c3 * t) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Gauss-Jacobi quadrature
// ---------------------------------------------------------------------------

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;  // include the (1-t)^a (1+t)^b factor
};

/// Golub-Welsch rule for the weight (1-t)^alpha (1+t)^beta on [-1, 1].
inline QuadRule gauss_jacobi(unsigned n, double alpha, double beta) {
    QuadRule rule;
    if (n == 0) return rule;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    double apb = alpha + beta;
    for (unsigned k = 0; k < n; ++k) {
        double denom = (2 * k + apb) * (2 * k + apb + 2);
        double ak = (k == 0) ? (beta - alpha) / (apb + 2)
                             : (beta * beta - alpha * alpha) / denom;
        J(k, k) = ak;
        if (k + 1 < n) {
            double kk = k + 1.0;
            double bk;
            if (k == 0)
                bk = 4 * (1 + alpha) * (1 + beta) /
                     ((apb + 2) * (apb + 2) * (apb + 3));
            else
                bk = 4 * kk * (kk + alpha) * (kk + beta) * (kk + apb) /
                     ((2 * kk + apb) * (2 * kk + apb) * (2 * kk + apb + 1) *
                      (2 * kk + apb - 1));
            double s = std::sqrt(bk);
            J(k, k + 1) = s;
            J(k + 1, k) = s;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mu0 = std::pow(2.0, apb + 1) *
                 std::exp(std::lgamma(alpha + 1) + std::lgamma(beta + 1) -
                          std::lgamma(apb + 2));
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

inline double quad_apply(const QuadRule& rule,
                         const std::function<double(double)>& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(rule.nodes[i]);
    return s;
}

/// Integral of (1-t)^alpha (1+t)^beta f(t) over [-1, 1] with `nodes` points.
/// The radius comes from a node-doubling comparison and is heuristic.
inline BoundedValue quad_weighted(const Rational& alpha, const Rational& beta,
                                  const std::function<double(double)>& f,
                                  unsigned nodes, double warn_tol = 1e-3) {
    double a = to_double(alpha), b = to_double(beta);
    double v1 = quad_apply(gauss_jacobi(nodes, a, b), f);
    double v2 = quad_apply(gauss_jacobi(2 * nodes, a, b), f);
    double disagree = std::abs(v1 - v2);
    double scale = std::max(std::abs(v2), 1.0);
    if (disagree > warn_tol * scale)
        throw ConvergenceWarning("quad_weighted: node-doubling disagreement " +
                                 std::to_string(disagree));
    return {v2, disagree + 8.0 * nodes * 1.1e-16 * scale, Rigor::heuristic};
}

}  // namespace rankone

#endif
