#include <doctest.h>

#include <cmath>

#include "rankone/corefn.hpp"

using namespace rankone;

TEST_CASE("pochhammer rising factorial") {
    CHECK(pochhammer(Rational(3, 2), 3) == Rational(105, 8));
    CHECK(pochhammer(Rational(7), 0) == 1);
    CHECK(pochhammer(Rational(1), 5) == 120);
    CHECK(pochhammer(Rational(-2), 3) == 0);  // hits zero factor
}

TEST_CASE("parse_rational accepts a/b, integers, and decimals") {
    CHECK(parse_rational("13/2") == Rational(13, 2));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-5/4") == Rational(-5, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("half-integer gamma values") {
    // Gamma(1/2) = sqrt(pi)
    PiScaled g12 = gamma_exact(HalfInteger::halves(1));
    CHECK(g12.r == 1);
    CHECK(g12.half_pi_pow == 1);
    // Gamma(5/2) = 3/4 sqrt(pi)
    PiScaled g52 = gamma_exact(HalfInteger::halves(5));
    CHECK(g52.r == Rational(3, 4));
    CHECK(g52.half_pi_pow == 1);
    // Gamma(4) = 6
    PiScaled g4 = gamma_exact(HalfInteger::halves(8));
    CHECK(g4.r == 6);
    CHECK(g4.half_pi_pow == 0);
    CHECK_THROWS_AS(gamma_exact(HalfInteger::halves(0)), PoleError);
}

TEST_CASE("gamma_ratio takes the exact path on integer gaps") {
    // Gamma(7/2)/Gamma(3/2) = (3/2)(5/2) = 15/4
    BoundedValue r = gamma_ratio(Rational(7, 2), Rational(3, 2));
    CHECK(r.value == doctest::Approx(3.75).epsilon(1e-15));
    CHECK(r.radius <= 1e-14);
}

TEST_CASE("terminating 2F1 against direct expansion") {
    // F(-2, 1; 2; x) = 1 - x + x^2/3
    Rational x(1, 3);
    Rational want = 1 - x + x * x / 3;
    CHECK(hyp2f1_terminating_exact(2, 1, 2, x) == want);
    BoundedValue v = hyp2f1_terminating(2, 1, 2, to_double(x));
    CHECK(std::abs(v.value - to_double(want)) <= v.radius + 1e-15);
}

TEST_CASE("2F1 coefficient pole detection") {
    // c = -1 makes (c)_2 vanish before the series terminates
    CHECK_THROWS_AS(hyp2f1_coeffs(3, 1, Rational(-1)), PoleError);
}

TEST_CASE("jacobi recurrence agrees with exact rational evaluation") {
    for (unsigned k : {0u, 1u, 2u, 5u, 11u, 20u}) {
        Rational a(5, 2), b(1);
        Rational t(-3, 7);
        Rational exact = jacobi_poly_exact(k, a, b, t);
        BoundedValue fl = jacobi_poly(k, a, b, to_double(t));
        CHECK(std::abs(fl.value - to_double(exact)) <=
              fl.radius + 1e-13 * std::abs(to_double(exact)));
    }
    // endpoint: P_k^{(a,b)}(1) = (a+1)_k / k!
    CHECK(jacobi_poly_exact(4, Rational(3), Rational(1), 1) ==
          pochhammer(4, 4) / pochhammer(1, 4));
}

TEST_CASE("gauss-jacobi quadrature integrates polynomial moments exactly") {
    // weight (1-x)^2 (1+x) on [-1,1]; moments against x^k
    QuadRule rule = gauss_jacobi(8, 2.0, 1.0);
    double mass = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        mass += rule.weights[i];
        m1 += rule.weights[i] * rule.nodes[i];
        m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    // int (1-x)^2(1+x) = 4/3; int x(1-x)^2(1+x) = -4/15;
    // int x^2 (1-x)^2(1+x) = 4/15
    CHECK(mass == doctest::Approx(4.0 / 3).epsilon(1e-13));
    CHECK(m1 == doctest::Approx(-4.0 / 15).epsilon(1e-12));
    CHECK(m2 == doctest::Approx(4.0 / 15).epsilon(1e-12));
}

TEST_CASE("gauss-jacobi is exact at degree 2N-1") {
    // N nodes integrate x^(2N-1) against the weight exactly; compare N=6
    // against a large reference rule
    auto moment = [](unsigned n, int deg) {
        QuadRule r = gauss_jacobi(n, 0.5, 0.5);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], deg);
        return s;
    };
    CHECK(moment(6, 11) == doctest::Approx(moment(64, 11)).epsilon(1e-13));
}

TEST_CASE("quad_weighted flags non-converged integrands") {
    // a near-pole integrand makes tiny rules disagree under doubling
    CHECK_THROWS_AS(quad_weighted(Rational(0), Rational(0),
                                  [](double x) { return 1.0 / (1.0001 - x); },
                                  2),
                    ConvergenceWarning);
}

TEST_CASE("pi-scaled arithmetic") {
    PiScaled half = gamma_exact(HalfInteger::halves(1));
    PiScaled prod = half * half;
    CHECK(prod.half_pi_pow == 2);
    CHECK(prod.value() == doctest::Approx(M_PI).epsilon(1e-15));
}
