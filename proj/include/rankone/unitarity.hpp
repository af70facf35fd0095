#ifndef RANKONE_UNITARITY_HPP
#define RANKONE_UNITARITY_HPP

#include "rankone/corefn.hpp"
#include "rankone/family.hpp"

namespace rankone {

/// Half sum of positive roots evaluated at H0.
inline Rational rho(const GroupFamily& g) {
    switch (g.kind) {
        case Family::Real: return Rational(g.n - 1, 2);
        case Family::Complex: return Rational(g.n);
        case Family::Quaternion: return Rational(2 * g.n + 1);
        case Family::Octonion: return Rational(11);
    }
    throw std::logic_error("unreachable");
}

struct OpenInterval {
    Rational lo;
    Rational hi;
    bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// The full complementary-series parameter range of the family.
inline OpenInterval complementary_range(const GroupFamily& g) {
    switch (g.kind) {
        case Family::Real: return {0, Rational(g.n - 1)};
        case Family::Complex: return {0, Rational(2 * g.n)};
        case Family::Quaternion: return {2, Rational(4 * g.n)};
        case Family::Octonion: return {6, 16};
    }
    throw std::logic_error("unreachable");
}

enum class Regime { complementary, quotient };

/// A unitary parameter: either nu strictly inside the complementary range,
/// or the reducible quotient point nu(k) (Real nu=-k, k>=0; Complex
/// nu=-2k, k>=0; Quaternion nu=-2k, k>=-1 -- the k=-1 point sits at the
/// complementary boundary and is flagged).
struct NuParameter {
    Rational value;
    Regime regime = Regime::complementary;
    int k = 0;
    bool boundary_flag = false;

    static NuParameter complementary(const Rational& nu) {
        return {nu, Regime::complementary, 0, false};
    }
    static NuParameter quotient(Family f, int kk) {
        switch (f) {
            case Family::Real:
                if (kk < 0) throw std::invalid_argument("quotient: k >= 0");
                return {Rational(-kk), Regime::quotient, kk, false};
            case Family::Complex:
                if (kk < 0) throw std::invalid_argument("quotient: k >= 0");
                return {Rational(-2 * kk), Regime::quotient, kk, false};
            case Family::Quaternion:
                if (kk < -1) throw std::invalid_argument("quotient: k >= -1");
                return {Rational(-2 * kk), Regime::quotient, kk, kk == -1};
            case Family::Octonion:
                throw std::invalid_argument(
                    "quotient: no quotient regime for F4");
        }
        throw std::logic_error("unreachable");
    }
};

/// Classifies a raw rational nu; throws std::domain_error when nu lies in
/// no unitary regime of the family.
inline NuParameter classify_nu(const GroupFamily& g, const Rational& nu) {
    if (complementary_range(g).contains(nu))
        return NuParameter::complementary(nu);
    Rational neg = -nu;
    if (g.kind == Family::Real && is_integer(neg) && nu <= 0)
        return NuParameter::quotient(g.kind,
                                     static_cast<int>(neg.get_num().get_si()));
    Rational half = neg / 2;
    if ((g.kind == Family::Complex || g.kind == Family::Quaternion) &&
        is_integer(half)) {
        long k = half.get_num().get_si();
        if (g.kind == Family::Complex && k >= 0)
            return NuParameter::quotient(g.kind, static_cast<int>(k));
        if (g.kind == Family::Quaternion && k >= -1)
            return NuParameter::quotient(g.kind, static_cast<int>(k));
    }
    throw std::domain_error("nu lies in no unitary regime for this family");
}

// ---------------------------------------------------------------------------
// Complementary-series constants
// ---------------------------------------------------------------------------

/// lambda_nu(tau) of the invariant form, exact Pochhammer-ratio form.
inline Rational lambda_nu_exact(const GroupFamily& g, const Rational& nu,
                                const KType& tau) {
    const unsigned long p = static_cast<unsigned long>(tau.p);
    const unsigned long q = static_cast<unsigned long>(tau.q);
    auto ratio = [](const Rational& a, const Rational& b,
                    unsigned long m) -> Rational {
        Rational den = pochhammer(b, m);
        if (den == 0) throw PoleError("lambda_nu: denominator Pochhammer vanishes");
        return pochhammer(a, m) / den;
    };
    switch (g.kind) {
        case Family::Real:
            return ratio(Rational(g.n - 1) - nu, nu, p);
        case Family::Complex:
            return ratio(Rational(g.n) - nu / 2, nu / 2, p) *
                   ratio(Rational(g.n) - nu / 2, nu / 2, q);
        case Family::Quaternion:
            return ratio(Rational(2 * g.n) - nu / 2, nu / 2 - 1, (p - q) / 2) *
                   ratio(Rational(2 * g.n + 1) - nu / 2, nu / 2, (p + q) / 2);
        case Family::Octonion:
            return ratio(Rational(8) - nu / 2, nu / 2 - 3, (p - q) / 2) *
                   ratio(Rational(11) - nu / 2, nu / 2, (p + q) / 2);
    }
    throw std::logic_error("unreachable");
}

/// Same constant for float nu (plotting paths), with error propagation.
inline BoundedValue lambda_nu(const GroupFamily& g, double nu,
                              const KType& tau) {
    // double -> mpq conversion is exact, so the Pochhammer path stays exact
    return BoundedValue::exact(lambda_nu_exact(g, Rational(nu), tau));
}

/// lambda^flat: the same family one rank lower, evaluated on an L-type.
/// Octonion: H = Spin(8,1) is the Real family at n = 8 with parameter nu/2.
inline Rational lambda_flat_exact(const GroupFamily& g, const Rational& nu,
                                  const LType& sigma) {
    switch (g.kind) {
        case Family::Real:
            return lambda_nu_exact(GroupFamily::real(g.n - 1), nu,
                                   {sigma.s, 0});
        case Family::Complex:
            return lambda_nu_exact(GroupFamily::complex(g.n - 1), nu,
                                   {sigma.s, sigma.t});
        case Family::Quaternion:
            return lambda_nu_exact(GroupFamily::quaternion(g.n - 1), nu,
                                   {sigma.s, sigma.t});
        case Family::Octonion:
            return lambda_nu_exact(GroupFamily::real(8), nu / 2,
                                   {sigma.s, 0});
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Quotient modules at reducible points
// ---------------------------------------------------------------------------

/// Membership in the kernel M_nu of the quotient map at nu(k).
inline bool in_quotient_kernel(Family f, int k, const KType& tau) {
    switch (f) {
        case Family::Real:
            return tau.p <= k;
        case Family::Complex:
            if (k > 0) return tau.p <= k || tau.q <= k;
            // k = 0: the holomorphic and antiholomorphic towers are quotiented
            // away from W_0, leaving only p, q >= 1.
            return tau.p == 0 || tau.q == 0;
        case Family::Quaternion:
            if (k >= 0) return tau.p - tau.q <= 2 * k + 2;
            return tau.p == 0 && tau.q == 0;  // k = -1
        case Family::Octonion:
            throw std::invalid_argument("no quotient regime for F4");
    }
    return false;
}

/// Unitarity constant of the quotient module, normalized to 1 on the first
/// surviving K-type layer.  Quaternion: the printed Pochhammer subscript
/// would put (0)_m in the denominator for every surviving type; the
/// index is shifted by one and the result renormalized (see tests).
inline Rational quotient_lambda(const GroupFamily& g, int k,
                                const KType& tau) {
    if (in_quotient_kernel(g.kind, k, tau))
        throw KernelError("quotient_lambda: tau lies in M_nu");
    auto ratio = [](const Rational& a, long m) -> Rational {
        if (m <= 0) return 1;
        unsigned long mm = static_cast<unsigned long>(m);
        return pochhammer(a, mm) / pochhammer(1, mm);
    };
    switch (g.kind) {
        case Family::Real:
            return ratio(Rational(g.n + 2 * k), tau.p - k - 1);
        case Family::Complex: {
            if (k == 0)
                throw std::invalid_argument(
                    "quotient_lambda: k = 0 has three quotients; use the "
                    "dedicated descriptors");
            return ratio(Rational(g.n + 2 * k + 1), tau.p - k - 1) *
                   ratio(Rational(g.n + 2 * k + 1), tau.q - k - 1);
        }
        case Family::Quaternion: {
            long i1 = (tau.p - tau.q) / 2 - k - 1;
            long i2 = (tau.p + tau.q) / 2 - k - 1;
            Rational base(2 * g.n + 2 * k + 2);
            return ratio(base, i1 - 1) * ratio(base, i2) / base;
        }
        case Family::Octonion:
            throw std::invalid_argument("no quotient regime for F4");
    }
    throw std::logic_error("unreachable");
}

// The three k = 0 quotients of the Complex family.  lambda^+ lives on the
// holomorphic tower W^{p,0}, p >= 1 (lambda^- symmetrically), and
// lambda_0 on the two-sided tower p, q >= 1.
inline Rational quotient_lambda_plus(const GroupFamily& g, int p) {
    if (g.kind != Family::Complex || p < 1)
        throw KernelError("quotient_lambda_plus: needs Complex family, p >= 1");
    return 1 / pochhammer(Rational(p), static_cast<unsigned long>(g.n));
}

inline Rational quotient_lambda_minus(const GroupFamily& g, int q) {
    return quotient_lambda_plus(g, q);
}

inline Rational quotient_lambda_zero(const GroupFamily& g, const KType& tau) {
    if (g.kind != Family::Complex || tau.p < 1 || tau.q < 1)
        throw KernelError("quotient_lambda_zero: needs Complex, p, q >= 1");
    unsigned long m = static_cast<unsigned long>(g.n - 1);
    return pochhammer(Rational(tau.p), m) * pochhammer(Rational(tau.q), m);
}

/// lambda^flat in the quotient regime: the quotient constant of the
/// subgroup H (same family, one rank lower, same k).
inline Rational quotient_lambda_flat(const GroupFamily& g, int k,
                                     const LType& sigma) {
    GroupFamily h = g;
    h.n = g.n - 1;
    return quotient_lambda(h, k, {sigma.s, sigma.t});
}

inline bool in_quotient_kernel_flat(Family f, int k, const LType& sigma) {
    return in_quotient_kernel(f, k, {sigma.s, sigma.t});
}

}  // namespace rankone

#endif
