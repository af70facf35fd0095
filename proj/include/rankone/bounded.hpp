#ifndef RANKONE_BOUNDED_HPP
#define RANKONE_BOUNDED_HPP

#include <cmath>
#include <cstdlib>
#include <limits>

#include "rankone/exact.hpp"

namespace rankone {

enum class Rigor { rigorous, heuristic };

inline Rigor combine(Rigor a, Rigor b) {
    return (a == Rigor::heuristic || b == Rigor::heuristic) ? Rigor::heuristic
                                                            : Rigor::rigorous;
}

// A double together with a non-negative error radius.  Arithmetic
// propagates radii conservatively.
struct BoundedValue {
    double value = 0.0;
    double radius = 0.0;
    Rigor rigor = Rigor::rigorous;

    static BoundedValue exact(double v) { return {v, 0.0, Rigor::rigorous}; }
    static BoundedValue exact(const Rational& r) {
        // conversion to double may round; one ulp covers it
        double v = to_double(r);
        return {v, std::abs(v) * 1.1e-16, Rigor::rigorous};
    }

    bool contains(double x) const { return std::abs(x - value) <= radius; }

    BoundedValue operator-() const { return {-value, radius, rigor}; }

    BoundedValue operator+(const BoundedValue& o) const {
        return {value + o.value, radius + o.radius, combine(rigor, o.rigor)};
    }
    BoundedValue operator-(const BoundedValue& o) const {
        return {value - o.value, radius + o.radius, combine(rigor, o.rigor)};
    }
    BoundedValue operator*(const BoundedValue& o) const {
        double r = std::abs(value) * o.radius + std::abs(o.value) * radius +
                   radius * o.radius;
        return {value * o.value, r, combine(rigor, o.rigor)};
    }
    BoundedValue operator/(const BoundedValue& o) const {
        double q = value / o.value;
        double denom = std::abs(o.value) - o.radius;
        double r = denom > 0.0
                       ? (radius + std::abs(q) * o.radius) / denom
                       : std::numeric_limits<double>::infinity();
        return {q, r, combine(rigor, o.rigor)};
    }
    BoundedValue operator*(double c) const {
        return {value * c, radius * std::abs(c), rigor};
    }
};

inline BoundedValue heuristic(double v, double r) {
    return {v, r, Rigor::heuristic};
}

}  // namespace rankone

#endif
