#include <doctest.h>

#include "rankone/unitarity.hpp"

using namespace rankone;

TEST_CASE("rho and complementary ranges") {
    CHECK(rho(GroupFamily::real(4)) == Rational(3, 2));
    CHECK(rho(GroupFamily::complex(3)) == 3);
    CHECK(rho(GroupFamily::quaternion(2)) == 5);
    CHECK(rho(GroupFamily::octonion()) == 11);

    CHECK(complementary_range(GroupFamily::real(4)).hi == 3);
    CHECK(complementary_range(GroupFamily::complex(3)).hi == 6);
    CHECK(complementary_range(GroupFamily::quaternion(2)).lo == 2);
    CHECK(complementary_range(GroupFamily::quaternion(2)).hi == 8);
    CHECK(complementary_range(GroupFamily::octonion()).lo == 6);
    CHECK(complementary_range(GroupFamily::octonion()).hi == 16);
}

TEST_CASE("nu classification") {
    GroupFamily r4 = GroupFamily::real(4);
    CHECK(classify_nu(r4, Rational(1, 2)).regime == Regime::complementary);
    CHECK(classify_nu(r4, Rational(-2)).regime == Regime::quotient);
    CHECK(classify_nu(r4, Rational(-2)).k == 2);
    CHECK(classify_nu(r4, Rational(0)).k == 0);
    CHECK_THROWS_AS(classify_nu(r4, Rational(7, 2)), std::domain_error);
    CHECK_THROWS_AS(classify_nu(r4, Rational(-1, 2)), std::domain_error);

    GroupFamily c3 = GroupFamily::complex(3);
    CHECK(classify_nu(c3, Rational(-4)).k == 2);
    CHECK_THROWS_AS(classify_nu(c3, Rational(-3)), std::domain_error);

    GroupFamily h2 = GroupFamily::quaternion(2);
    NuParameter boundary = classify_nu(h2, Rational(2));
    CHECK(boundary.regime == Regime::quotient);
    CHECK(boundary.k == -1);
    CHECK(boundary.boundary_flag);
    CHECK(classify_nu(h2, Rational(-6)).k == 3);

    CHECK_THROWS_AS(classify_nu(GroupFamily::octonion(), Rational(-2)),
                    std::domain_error);
    CHECK(classify_nu(GroupFamily::octonion(), Rational(13, 2)).regime ==
          Regime::complementary);
}

TEST_CASE("complementary-series constants: frozen values") {
    CHECK(lambda_nu_exact(GroupFamily::real(4), 1, {2, 0}) == 3);
    // trivial type is always 1
    for (const GroupFamily& g :
         {GroupFamily::real(5), GroupFamily::complex(3),
          GroupFamily::quaternion(2), GroupFamily::octonion()}) {
        Rational nu = (complementary_range(g).lo + complementary_range(g).hi) / 2;
        CHECK(lambda_nu_exact(g, nu, {0, 0}) == 1);
    }
    CHECK(lambda_nu_exact(GroupFamily::quaternion(2), 3, {2, 0}) ==
          Rational(35, 3));
    // negative witness outside the positivity threshold
    CHECK(lambda_nu_exact(GroupFamily::real(4), Rational(16, 5), {1, 0}) ==
          Rational(-1, 16));
}

TEST_CASE("positivity inside the complementary range") {
    for (const GroupFamily& g :
         {GroupFamily::real(4), GroupFamily::complex(3),
          GroupFamily::quaternion(2), GroupFamily::octonion()}) {
        OpenInterval range = complementary_range(g);
        for (int i = 1; i <= 4; ++i) {
            Rational nu = range.lo + (range.hi - range.lo) * Rational(i, 5);
            for (int p = 0; p <= 12; ++p)
                for (int q = 0; q <= p; ++q) {
                    if (!ktype_valid(g, {p, q})) continue;
                    CHECK(lambda_nu_exact(g, nu, {p, q}) > 0);
                }
        }
    }
}

TEST_CASE("float entry point stays exact") {
    BoundedValue v = lambda_nu(GroupFamily::real(4), 1.0, {2, 0});
    CHECK(v.value == 3.0);
    CHECK(v.radius <= 1e-15 * v.value);  // one rounding of the exact rational
}

TEST_CASE("lambda-flat is the rank-lowered constant") {
    CHECK(lambda_flat_exact(GroupFamily::real(5), 1, {2, 0}) ==
          lambda_nu_exact(GroupFamily::real(4), 1, {2, 0}));
    // Octonion subgroup chain evaluates the Real n = 8 family at nu/2
    CHECK(lambda_flat_exact(GroupFamily::octonion(), Rational(13, 2), {2, 0}) ==
          lambda_nu_exact(GroupFamily::real(8), Rational(13, 4), {2, 0}));
    CHECK(lambda_flat_exact(GroupFamily::octonion(), Rational(13, 2), {2, 0}) ==
          Rational(285, 221));
}

TEST_CASE("quotient kernels") {
    CHECK(in_quotient_kernel(Family::Real, 1, {1, 0}));
    CHECK_FALSE(in_quotient_kernel(Family::Real, 1, {2, 0}));
    CHECK(in_quotient_kernel(Family::Complex, 0, {3, 0}));
    CHECK_FALSE(in_quotient_kernel(Family::Complex, 0, {3, 1}));
    CHECK(in_quotient_kernel(Family::Complex, 2, {5, 1}));
    CHECK(in_quotient_kernel(Family::Quaternion, 0, {2, 0}));
    CHECK_FALSE(in_quotient_kernel(Family::Quaternion, 0, {4, 0}));
    CHECK(in_quotient_kernel(Family::Quaternion, -1, {0, 0}));
    CHECK_FALSE(in_quotient_kernel(Family::Quaternion, -1, {1, 1}));
}

TEST_CASE("quotient constants: frozen values") {
    GroupFamily r4 = GroupFamily::real(4);
    CHECK(quotient_lambda(r4, 1, {2, 0}) == 1);  // first surviving layer
    CHECK(quotient_lambda(r4, 1, {3, 0}) == 6);  // (n+2k)_1/(1)_1
    CHECK_THROWS_AS(quotient_lambda(r4, 1, {1, 0}), KernelError);

    GroupFamily c3 = GroupFamily::complex(3);
    CHECK(quotient_lambda(c3, 1, {2, 2}) == 1);
    CHECK(quotient_lambda(c3, 1, {3, 2}) == 6);  // (n+2k+1)_1
    CHECK_THROWS_AS(quotient_lambda(c3, 0, {1, 1}), std::invalid_argument);
    CHECK(quotient_lambda_zero(c3, {1, 1}) == 4);  // (1)_2 (1)_2
    CHECK(quotient_lambda_zero(c3, {2, 1}) == 12);  // (2)_2 (1)_2
    CHECK(quotient_lambda_plus(c3, 1) == Rational(1, 6));  // 1/(1)_3
    CHECK_THROWS_AS(quotient_lambda_zero(c3, {0, 1}), KernelError);

    GroupFamily h2 = GroupFamily::quaternion(2);
    CHECK_FALSE(in_quotient_kernel(Family::Quaternion, 0, {4, 0}));
    CHECK(quotient_lambda(h2, 0, {4, 0}) > 0);
    // k = -1 normalizes to 1 on the first surviving layer (1,1)
    CHECK(quotient_lambda(h2, -1, {1, 1}) == 1);
}

TEST_CASE("quotient flat constants mirror the rank-lowered group") {
    CHECK(quotient_lambda_flat(GroupFamily::real(5), 1, {3, 0}) ==
          quotient_lambda(GroupFamily::real(4), 1, {3, 0}));
    CHECK(in_quotient_kernel_flat(Family::Real, 1, {1, 0}));
}

TEST_CASE("pole detection in the exact constants") {
    // nu = 0 makes (nu)_p vanish for p >= 1
    CHECK_THROWS_AS(lambda_nu_exact(GroupFamily::real(4), 0, {1, 0}),
                    PoleError);
}
