#ifndef RANKONE_EXACT_HPP
#define RANKONE_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rankone {

// Exact rational scalar, always in lowest terms with positive denominator
// (mpq_class canonicalizes on construction and after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DominanceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct KernelError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConvergenceWarning : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonpositive_integer(const Rational& r) {
    return is_integer(r) && r <= 0;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "a/b" or "a" (also accepts a plain decimal like "1.5").
inline Rational parse_rational(const std::string& s) {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        // explicit base 10: GMP's base-0 parsing would read a leading
        // zero (as in "0.25" -> "025") as octal
        Rational r(Integer(digits, 10), den);
        r.canonicalize();
        return r;
    }
    Rational r(s, 10);
    r.canonicalize();
    return r;
}

// Value of the form 2t/2; exactly represents every Gamma argument that
// appears once the integer indices and a rational nu are fixed.
struct HalfInteger {
    long twice = 0;

    static HalfInteger whole(long v) { return HalfInteger{2 * v}; }
    static HalfInteger halves(long t) { return HalfInteger{t}; }

    bool is_whole() const { return twice % 2 == 0; }
    Rational to_rational() const { return Rational(twice, 2); }
    double to_double() const { return 0.5 * static_cast<double>(twice); }

    HalfInteger operator+(HalfInteger o) const { return HalfInteger{twice + o.twice}; }
    HalfInteger operator-(HalfInteger o) const { return HalfInteger{twice - o.twice}; }
    HalfInteger operator+(long v) const { return HalfInteger{twice + 2 * v}; }
    bool operator==(const HalfInteger&) const = default;
};

}  // namespace rankone

#endif
