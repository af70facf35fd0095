#ifndef RANKONE_WEYL_HPP
#define RANKONE_WEYL_HPP

#include <cstdlib>
#include <vector>

#include "rankone/bounded.hpp"
#include "rankone/exact.hpp"
#include "rankone/family.hpp"

namespace rankone {

// Root system in e-coordinates.  `coords` is the number of e-basis vectors:
// type A with m coordinates is the A_{m-1} system realized in R^m (gl-style,
// roots e_i - e_j), B/C/D with m coordinates are B_m/C_m/D_m.
enum class RootType { A, B, C, D };

struct RootSystem {
    RootType type = RootType::A;
    int coords = 1;
};

/// Highest weight in the e-basis, stored as twice-values so half-integer
/// (spinor) weights stay exact.
struct HighestWeight {
    std::vector<long> twice;

    static HighestWeight of(std::vector<long> whole) {
        HighestWeight hw;
        hw.twice.reserve(whole.size());
        for (long v : whole) hw.twice.push_back(2 * v);
        return hw;
    }
    static HighestWeight halves(std::vector<long> twice) { return {std::move(twice)}; }
};

inline std::vector<std::vector<int>> positive_roots(const RootSystem& rs) {
    std::vector<std::vector<int>> roots;
    int m = rs.coords;
    auto root = [&](int i, int j, int ci, int cj) {
        std::vector<int> r(m, 0);
        r[i] = ci;
        if (j >= 0) r[j] += cj;
        roots.push_back(std::move(r));
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            root(i, j, 1, -1);
            if (rs.type != RootType::A) root(i, j, 1, 1);
        }
    if (rs.type == RootType::B)
        for (int i = 0; i < m; ++i) root(i, -1, 1, 0);
    if (rs.type == RootType::C)
        for (int i = 0; i < m; ++i) root(i, -1, 2, 0);
    return roots;
}

inline bool dominant(const RootSystem& rs, const HighestWeight& hw) {
    const auto& c = hw.twice;
    if (static_cast<int>(c.size()) != rs.coords) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    if ((rs.type == RootType::B || rs.type == RootType::C) && !c.empty() &&
        c.back() < 0)
        return false;
    if (rs.type == RootType::D && c.size() >= 2 &&
        c[c.size() - 2] < std::labs(c.back()))
        return false;
    return true;
}

/// Weyl dimension formula: prod_{alpha>0} <lambda+delta, alpha>/<delta, alpha>.
inline Rational weyl_dim(const RootSystem& rs, const HighestWeight& hw) {
    if (!dominant(rs, hw))
        throw DominanceError("weyl_dim: weight is not dominant");
    auto roots = positive_roots(rs);
    std::vector<long> twice_delta(rs.coords, 0);
    for (const auto& a : roots)
        for (int i = 0; i < rs.coords; ++i) twice_delta[i] += a[i];
    Rational dim = 1;
    for (const auto& a : roots) {
        long num = 0, den = 0;
        for (int i = 0; i < rs.coords; ++i) {
            num += (hw.twice[i] + twice_delta[i]) * a[i];
            den += twice_delta[i] * a[i];
        }
        dim *= Rational(num, den);
    }
    dim.canonicalize();
    return dim;
}

/// Same product in doubles, for hot loops that only need asymptotics.
inline double weyl_dim_double(const RootSystem& rs,
                              const std::vector<double>& lambda) {
    auto roots = positive_roots(rs);
    std::vector<long> twice_delta(rs.coords, 0);
    for (const auto& a : roots)
        for (int i = 0; i < rs.coords; ++i) twice_delta[i] += a[i];
    double dim = 1.0;
    for (const auto& a : roots) {
        double num = 0, den = 0;
        for (int i = 0; i < rs.coords; ++i) {
            num += (2.0 * lambda[i] + twice_delta[i]) * a[i];
            den += static_cast<double>(twice_delta[i]) * a[i];
        }
        dim *= num / den;
    }
    return dim;
}

// ---------------------------------------------------------------------------
// K- and L-type dimensions
// ---------------------------------------------------------------------------

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

/// dim of degree-p spherical harmonics on R^m.
inline Integer harmonic_dim(int m, int p) {
    if (p == 0) return 1;
    return binomial(m + p - 1, p) - binomial(m + p - 3, p - 2);
}

// Dimension of the (p,q) type of the compact group of family f at the given
// rank.  Real: SO(rank) harmonics.  Complex: A-type weight (p,0,...,0,-q).
// Quaternion: C_rank weight ((p+q)/2, (p-q)/2, 0, ...) times the Sp(1)
// factor q+1.  Octonion: B4 weight (p,q,q,q)/2.
inline Rational ktype_dim_rank(Family f, int rank, int p, int q) {
    if (!ktype_valid_rank(f, rank, p, q))
        throw DominanceError("ktype_dim: invalid type index");
    switch (f) {
        case Family::Real:
            return Rational(harmonic_dim(rank, p));
        case Family::Complex: {
            if (rank == 1) return 1;
            std::vector<long> w(rank, 0);
            w[0] = p;
            w[rank - 1] = -q;
            return weyl_dim({RootType::A, rank}, HighestWeight::of(w));
        }
        case Family::Quaternion: {
            std::vector<long> twice(rank, 0);
            twice[0] = p + q;
            if (rank >= 2) twice[1] = p - q;
            Rational d = weyl_dim({RootType::C, rank}, HighestWeight::halves(twice));
            return d * Rational(q + 1);
        }
        case Family::Octonion: {
            return weyl_dim({RootType::B, 4},
                            HighestWeight::halves({p, q, q, q}));
        }
    }
    throw std::logic_error("unreachable");
}

inline Rational ktype_dim(const GroupFamily& g, const KType& tau) {
    if (g.kind == Family::Octonion) return ktype_dim_rank(g.kind, 4, tau.p, tau.q);
    return ktype_dim_rank(g.kind, g.n, tau.p, tau.q);
}

/// Dimension of the L-type V^sigma for the subgroup L.  Octonion: SO(8)
/// harmonics of degree q, as a D4 weight q*e1.
inline Rational ltype_dim(const GroupFamily& g, const LType& sigma) {
    if (g.kind == Family::Octonion) {
        std::vector<long> w(4, 0);
        w[0] = sigma.s;
        return weyl_dim({RootType::D, 4}, HighestWeight::of(w));
    }
    if (g.kind == Family::Quaternion) {
        if (!ltype_valid(g, sigma))
            throw DominanceError("ltype_dim: invalid type index");
        int rank = g.n - 1;
        // Sp(rank) weight ((s+t)/2, (s-t)/2, 0, ...) times the Sp(1)
        // factor t+1; at rank 1 only the first coordinate survives.
        std::vector<long> twice(rank, 0);
        twice[0] = sigma.s + sigma.t;
        if (rank >= 2) twice[1] = sigma.s - sigma.t;
        Rational d = weyl_dim({RootType::C, rank}, HighestWeight::halves(twice));
        return d * Rational(sigma.t + 1);
    }
    return ktype_dim_rank(g.kind, g.n - 1, sigma.s, sigma.t);
}

// ---------------------------------------------------------------------------
// Audit of the literature product formula for dim W^{p,q} (F4 case)
// ---------------------------------------------------------------------------

inline Rational printed_spin9_product(int p, int q) {
    Rational v = p + 7;
    for (int j = 0; j <= 2; ++j)
        v *= Rational(p + q + 8 + 2 * j) * (p - q + 2 + 2 * j) *
             (q + 4 + 2 * j) * (q + 1 + 2 * j);
    return v;
}

/// Ratio of the printed product (normalized at (0,0)) to weyl_dim.
inline BoundedValue printed_dim_ratio(const GroupFamily& g, const KType& tau) {
    if (g.kind != Family::Octonion)
        throw std::invalid_argument("printed_dim_ratio: Octonion only");
    Rational printed =
        printed_spin9_product(tau.p, tau.q) / printed_spin9_product(0, 0);
    return BoundedValue::exact(printed / ktype_dim(g, tau));
}

}  // namespace rankone

#endif
