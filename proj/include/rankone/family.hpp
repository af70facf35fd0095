#ifndef RANKONE_FAMILY_HPP
#define RANKONE_FAMILY_HPP

#include <stdexcept>
#include <string>

#include "rankone/exact.hpp"

namespace rankone {

enum class Family { Real, Complex, Quaternion, Octonion };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Real: return "R";
        case Family::Complex: return "C";
        case Family::Quaternion: return "H";
        case Family::Octonion: return "F4";
    }
    return "?";
}

/// Selects SO0(n,1;F) for F in {R, C, H}, or the F4(-20) case (n unused).
struct GroupFamily {
    Family kind = Family::Real;
    int n = 2;

    static GroupFamily real(int n) { return {Family::Real, n}; }
    static GroupFamily complex(int n) { return {Family::Complex, n}; }
    static GroupFamily quaternion(int n) { return {Family::Quaternion, n}; }
    static GroupFamily octonion() { return {Family::Octonion, 2}; }

    bool valid() const {
        switch (kind) {
            case Family::Real: return n >= 2;
            case Family::Complex: return n >= 2;
            case Family::Quaternion: return n >= 1;
            case Family::Octonion: return true;
        }
        return false;
    }
};

/// K-type index: (p) for Real, (p,q) otherwise.
struct KType {
    int p = 0;
    int q = 0;
    bool operator==(const KType&) const = default;
};

/// L-type index: (s) Real, (s,t) Complex/Quaternion, (q) Octonion (in s).
struct LType {
    int s = 0;
    int t = 0;
    bool operator==(const LType&) const = default;
};

// Validity of a (p,q) index against the compact group of the given family
// at the given rank.  Rank-1 cases: only harmonics (pq=0) exist on the
// circle, and only p=q types on S^3.
inline bool ktype_valid_rank(Family f, int rank, int p, int q) {
    switch (f) {
        case Family::Real:
            // the type index is one-dimensional; a nonzero q would alias
            // the same harmonic space
            return rank >= 2 && p >= 0 && q == 0;
        case Family::Complex:
            if (rank >= 2) return p >= 0 && q >= 0;
            return rank == 1 && p >= 0 && q >= 0 && (p == 0 || q == 0);
        case Family::Quaternion:
            if (rank >= 2) return p >= q && q >= 0 && (p - q) % 2 == 0;
            // S^3 harmonics: only the p = q types survive at rank 1.
            return rank == 1 && p == q && q >= 0;
        case Family::Octonion:
            return p >= q && q >= 0 && (p - q) % 2 == 0;
    }
    return false;
}

inline bool ktype_valid(const GroupFamily& g, const KType& tau) {
    return ktype_valid_rank(g.kind, g.n, tau.p, tau.q);
}

inline bool ltype_valid(const GroupFamily& g, const LType& sigma) {
    if (g.kind == Family::Octonion) return sigma.s >= 0 && sigma.t == 0;
    // Quaternion L = Sp(n-2)xSp(1) carries V^{s,t} for every s >= t with
    // s-t even, including n = 2 where the Sp factor has rank 1.
    if (g.kind == Family::Quaternion)
        return g.n >= 2 && sigma.s >= sigma.t && sigma.t >= 0 &&
               (sigma.s - sigma.t) % 2 == 0;
    return ktype_valid_rank(g.kind, g.n - 1, sigma.s, sigma.t);
}

/// Point on the sphere S = K/M in the angular coordinates of the family.
/// Real: a = x1 in [-1,1].  Complex/Quaternion: a = xi, b = theta.
/// Octonion: a = xi, b = eta.
struct SphericalPoint {
    double a = 0.0;
    double b = 0.0;

    static SphericalPoint real(double x1) { return {x1, 0.0}; }
    static SphericalPoint angles(double first, double second) {
        return {first, second};
    }
    static SphericalPoint base_point(Family f) {
        return f == Family::Real ? real(1.0) : angles(0.0, 0.0);
    }
};

}  // namespace rankone

#endif
