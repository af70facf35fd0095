#ifndef RANKONE_SPHERICAL_HPP
#define RANKONE_SPHERICAL_HPP

#include <cmath>

#include "rankone/corefn.hpp"
#include "rankone/family.hpp"

namespace rankone {

// ---------------------------------------------------------------------------
// Hypergeometric building block shared by all four families
//
// Every zonal function in play is of the form
//   cos^pow(xi) * F(-m, b; c; -tan^2 xi)
// which expands to the polynomial
//   sum_j coef_j (-1)^j sin^(2j) xi * cos^(pow-2j) xi,
// finite and stable for all angles (pow - 2m >= 0 throughout).
// ---------------------------------------------------------------------------

inline double int_pow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

inline BoundedValue phi_hyp_series(unsigned m, const Rational& b,
                                   const Rational& c, int pow, double cosv,
                                   double sinsq) {
    auto coef = hyp2f1_coeffs(m, b, c);
    double sum = 0.0, absum = 0.0, sp = 1.0;
    for (unsigned j = 0; j <= m; ++j) {
        double term = to_double(coef[j]) * sp * int_pow(cosv, pow - 2 * static_cast<int>(j));
        if (j % 2 == 1) term = -term;
        sum += term;
        absum += std::abs(term);
        sp *= sinsq;
    }
    return {sum, (m + 2) * 1.1e-16 * absum, Rigor::rigorous};
}

inline Rational phi_hyp_series_exact(unsigned m, const Rational& b,
                                     const Rational& c, int pow,
                                     const Rational& cosv,
                                     const Rational& sinsq) {
    auto coef = hyp2f1_coeffs(m, b, c);
    Rational sum = 0, sp = 1;
    for (unsigned j = 0; j <= m; ++j) {
        Rational cp = 1;
        for (int i = 0; i < pow - 2 * static_cast<int>(j); ++i) cp *= cosv;
        Rational term = coef[j] * sp * cp;
        sum += (j % 2 == 1) ? -term : term;
        sp *= sinsq;
    }
    return sum;
}

/// Chebyshev U_q(x) = sin((q+1)theta)/sin(theta) at x = cos(theta).
inline double chebyshev_u(int q, double x) {
    double um1 = 0.0, u = 1.0;
    for (int k = 0; k < q; ++k) {
        double next = 2.0 * x * u - um1;
        um1 = u;
        u = next;
    }
    return u;
}

// ---------------------------------------------------------------------------
// Radial profiles (functions of |x1|, or of the octonion angles)
// ---------------------------------------------------------------------------

/// Real family phi_p^n(x1); n may be any rational > 1 (used with n+2s).
inline BoundedValue phi_real_profile(const Rational& n, int p, double x1) {
    unsigned m = static_cast<unsigned>(p / 2);
    Rational b = (p % 2 == 0) ? Rational(-(p - 1), 2) : Rational(-p, 2);
    return phi_hyp_series(m, b, (n - 1) / 2, p, x1, 1.0 - x1 * x1);
}

inline Rational phi_real_profile_exact(const Rational& n, int p,
                                       const Rational& x1) {
    unsigned m = static_cast<unsigned>(p / 2);
    Rational b = (p % 2 == 0) ? Rational(-(p - 1), 2) : Rational(-p, 2);
    return phi_hyp_series_exact(m, b, (n - 1) / 2, p, x1, 1 - x1 * x1);
}

/// Complex family radial part of phi_{p,q}^n at |x1| = r (phase stripped);
/// n may be rational (used with n+s+t).
inline BoundedValue phi_complex_profile(const Rational& n, int p, int q,
                                        double r) {
    unsigned m = static_cast<unsigned>(std::min(p, q));
    Rational b(-std::max(p, q));
    return phi_hyp_series(m, b, n - 1, p + q, r, 1.0 - r * r);
}

/// Quaternion family radial part at |x1| = r (the xi-dependent factor);
/// integer n only -- the fractional-dimension variant is below.
inline BoundedValue phi_quaternion_profile(const Rational& n, int p, int q,
                                           double r) {
    unsigned m = static_cast<unsigned>((p - q) / 2);
    return phi_hyp_series(m, Rational(-(p + q + 2), 2), 2 * (n - 1), p, r,
                          1.0 - r * r);
}

/// phi_{k,0}^{n_eff} through the Jacobi-polynomial identity, valid for any
/// real n_eff > 1 (in particular the half-integer n + s/2 of the branching).
inline BoundedValue fractional_dim_phi(const Rational& n_eff, unsigned k,
                                       double xabs) {
    Rational pre = pochhammer(1, k) / pochhammer(2 * n_eff - 2, k);
    BoundedValue pk =
        jacobi_poly(k, 2 * n_eff - 3, 1, 2.0 * xabs * xabs - 1.0);
    return pk * to_double(pre);
}

/// Octonion xi-dependent factor of phi_{p,q} at cos(xi) = r.
inline BoundedValue phi_octonion_xi_profile(int p, int q, double r) {
    unsigned m = static_cast<unsigned>((p - q) / 2);
    return phi_hyp_series(m, Rational(-(p + q + 6), 2), 4, p, r, 1.0 - r * r);
}

/// Octonion eta-dependent factor: the S^7 zonal harmonic phi_q^8.
inline BoundedValue phi_octonion_eta_profile(int q, double coseta) {
    return phi_real_profile(8, q, coseta);
}

// ---------------------------------------------------------------------------
// Zonal function values
// ---------------------------------------------------------------------------

/// Value of the zonal spherical function, normalized so phi(H0) = 1.
/// For the Complex family the returned value is Re(phi) =
/// cos((p-q)theta) * radial; norms and orthogonality handle the phase
/// analytically.  The Quaternion sin-ratio is the Chebyshev kernel
/// U_q(cos theta), divided by q+1 to meet the normalization.
inline BoundedValue phi_eval(const GroupFamily& g, const KType& tau,
                             const SphericalPoint& pt) {
    if (!ktype_valid(g, tau)) throw DominanceError("phi_eval: invalid K-type");
    switch (g.kind) {
        case Family::Real:
            return phi_real_profile(g.n, tau.p, pt.a);
        case Family::Complex: {
            double r = std::cos(pt.a);
            BoundedValue rad = phi_complex_profile(g.n, tau.p, tau.q, r);
            return rad * std::cos((tau.p - tau.q) * pt.b);
        }
        case Family::Quaternion: {
            double r = std::cos(pt.a);
            BoundedValue rad = phi_quaternion_profile(g.n, tau.p, tau.q, r);
            double ang = chebyshev_u(tau.q, std::cos(pt.b)) / (tau.q + 1);
            return rad * ang;
        }
        case Family::Octonion: {
            BoundedValue xi = phi_octonion_xi_profile(tau.p, tau.q, std::cos(pt.a));
            BoundedValue eta = phi_octonion_eta_profile(tau.q, std::cos(pt.b));
            return xi * eta;
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Polar integration weights (separated-variable reductions)
// ---------------------------------------------------------------------------

// One Jacobi factor (1-t)^alpha (1+t)^beta on [-1,1] in a transformed
// variable; the product of the normalized factors is the push-forward of
// the normalized area measure of S to the zonal coordinates.
struct WeightFactor {
    Rational alpha;
    Rational beta;
    const char* variable;  // for table output
};

struct PolarWeight {
    std::vector<WeightFactor> factors;
};

/// Exact total mass of (1-t)^alpha(1+t)^beta dt for half-integer exponents.
inline PiScaled weight_mass_exact(const Rational& alpha, const Rational& beta) {
    auto half = [](const Rational& r) {
        Rational t = 2 * r;
        return HalfInteger::halves(static_cast<long>(t.get_num().get_si()));
    };
    PiScaled num = gamma_exact(half(alpha + 1)) * gamma_exact(half(beta + 1));
    PiScaled den = gamma_exact(half(alpha + beta + 2));
    PiScaled mass = num / den;
    Rational two_pow = 1;
    Rational e = alpha + beta + 1;  // integer or half-integer >= 1 here
    // exponents are integers in every family
    for (long i = 0; i < e.get_num().get_si() / e.get_den().get_si(); ++i)
        two_pow *= 2;
    return mass * two_pow;
}

inline PolarWeight polar_weight(const GroupFamily& g) {
    switch (g.kind) {
        case Family::Real:
            return {{{Rational(g.n - 3, 2), Rational(g.n - 3, 2), "x1"}}};
        case Family::Complex:
            return {{{Rational(g.n - 2), Rational(0), "t=2r^2-1"}}};
        case Family::Quaternion:
            // n = 1 is S^3 itself: |x1| = 1, only the theta coordinate.
            if (g.n == 1)
                return {{{Rational(1, 2), Rational(1, 2), "u=cos(theta)"}}};
            return {{{Rational(2 * g.n - 3), Rational(1), "t=2r^2-1"},
                     {Rational(1, 2), Rational(1, 2), "u=cos(theta)"}}};
        case Family::Octonion:
            return {{{Rational(3), Rational(3), "t=cos(2xi)"},
                     {Rational(5, 2), Rational(5, 2), "u=cos(eta)"}}};
    }
    throw std::logic_error("unreachable");
}

/// Mass-1 normalized integral of f against one weight factor.
inline BoundedValue normalized_quad(const WeightFactor& w,
                                    const std::function<double(double)>& f,
                                    unsigned nodes) {
    BoundedValue raw = quad_weighted(w.alpha, w.beta, f, nodes);
    double mass = weight_mass_exact(w.alpha, w.beta).value();
    return raw * (1.0 / mass);
}

// ---------------------------------------------------------------------------
// Schur-norm oracle and inner products
// ---------------------------------------------------------------------------

namespace detail {

inline double profile_value(const GroupFamily& g, const KType& tau, int factor,
                            double t) {
    switch (g.kind) {
        case Family::Real:
            return phi_real_profile(g.n, tau.p, t).value;
        case Family::Complex: {
            double r = std::sqrt(0.5 * (1.0 + t));
            return phi_complex_profile(g.n, tau.p, tau.q, r).value;
        }
        case Family::Quaternion:
            if (g.n >= 2 && factor == 0) {
                double r = std::sqrt(0.5 * (1.0 + t));
                return phi_quaternion_profile(g.n, tau.p, tau.q, r).value;
            }
            return chebyshev_u(tau.q, t) / (tau.q + 1);
        case Family::Octonion:
            if (factor == 0) {
                double r = std::sqrt(0.5 * (1.0 + t));
                return phi_octonion_xi_profile(tau.p, tau.q, r).value;
            }
            return phi_octonion_eta_profile(tau.q, t).value;
    }
    return 0.0;
}

}  // namespace detail

/// Normalized L^2(S) inner product of phi_tau and phi_tau2, with the
/// Complex phase selection rule applied analytically.
inline BoundedValue phi_inner(const GroupFamily& g, const KType& tau,
                              const KType& tau2, unsigned nodes) {
    if (g.kind == Family::Complex && tau.p - tau.q != tau2.p - tau2.q)
        return BoundedValue::exact(0.0);
    PolarWeight w = polar_weight(g);
    BoundedValue result = BoundedValue::exact(1.0);
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        auto f = [&, i](double t) {
            return detail::profile_value(g, tau, static_cast<int>(i), t) *
                   detail::profile_value(g, tau2, static_cast<int>(i), t);
        };
        result = result * normalized_quad(w.factors[i], f, nodes);
    }
    return result;
}

/// Quadrature value of ||phi_tau||^2; Schur orthogonality says this equals
/// 1/dim(W^tau).
inline BoundedValue phi_norm_sq_oracle(const GroupFamily& g, const KType& tau,
                                       unsigned nodes) {
    return phi_inner(g, tau, tau, nodes);
}

}  // namespace rankone

#endif
