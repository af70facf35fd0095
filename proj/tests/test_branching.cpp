#include <doctest.h>

#include <cmath>

#include "rankone/branching.hpp"

using namespace rankone;

TEST_CASE("admissible sigma enumeration") {
    // Real: same parity, 0 <= s <= p
    auto rs = admissible_sigmas(Family::Real, {5, 0});
    REQUIRE(rs.size() == 3);
    CHECK(rs[0].s == 1);
    CHECK(rs[1].s == 3);
    CHECK(rs[2].s == 5);

    // Complex: diagonal strips p - s = q - t
    auto cs = admissible_sigmas(Family::Complex, {2, 1});
    REQUIRE(cs.size() == 2);
    CHECK((cs[0].s == 1 && cs[0].t == 0));
    CHECK((cs[1].s == 2 && cs[1].t == 1));

    // Quaternion: t = q, q <= s <= p with p - s even
    auto hs = admissible_sigmas(Family::Quaternion, {4, 2});
    REQUIRE(hs.size() == 2);
    CHECK((hs[0].s == 2 && hs[0].t == 2));
    CHECK((hs[1].s == 4 && hs[1].t == 2));

    // Octonion: single target s = q
    auto os = admissible_sigmas(Family::Octonion, {3, 1});
    REQUIRE(os.size() == 1);
    CHECK((os[0].s == 1 && os[0].t == 0));
}

TEST_CASE("admissible tau enumeration is the inverse walk") {
    auto rt = admissible_taus(Family::Real, {1, 0}, 7);
    REQUIRE(rt.size() == 4);
    CHECK(rt[0].p == 1);
    CHECK(rt[3].p == 7);
    auto ct = admissible_taus(Family::Complex, {1, 0}, 4);
    REQUIRE(ct.size() == 4);
    CHECK((ct[2].p == 3 && ct[2].q == 2));
    // Quaternion sigma with s - t odd pairs with no tau
    CHECK(admissible_taus(Family::Quaternion, {3, 2}, 20).empty());
    for (const KType& tau : admissible_taus(Family::Quaternion, {4, 2}, 12))
        CHECK(branch_admissible(Family::Quaternion, tau, {4, 2}));
}

TEST_CASE("closed-form restriction norms: frozen values") {
    // Complex: p + q + n - 1 for every admissible pair
    CHECK(restriction_norm_sq_closed(GroupFamily::complex(4), {0, 0}, {0, 0})
              .value == doctest::Approx(3.0));
    CHECK(restriction_norm_sq_closed(GroupFamily::complex(3), {2, 1}, {1, 0})
              .value == doctest::Approx(5.0));
    // Real n = 3, trivial pair: the half-circumference constant pi/2
    CHECK(restriction_norm_sq_closed(GroupFamily::real(3), {0, 0}, {0, 0})
              .value == doctest::Approx(M_PI / 2).epsilon(1e-14));
    // Quaternion n = 2, tau = sigma = (1,1): first-principles value is 2
    CHECK(restriction_norm_sq_quaternion_exact(2, 1, 1, 1) == 2);
    // Quaternion n = 2, tau = (2,0), sigma = (0,0): value 5
    CHECK(restriction_norm_sq_quaternion_exact(2, 2, 0, 0) == 5);
    // Inadmissible pairs are zero
    CHECK(restriction_norm_sq_closed(GroupFamily::real(3), {1, 0}, {0, 0})
              .value == 0.0);
}

TEST_CASE("oracle equals closed form up to one constant per family") {
    struct Probe {
        GroupFamily g;
        KType tau;
        LType sigma;
    };
    const Probe probes[] = {
        {GroupFamily::real(4), {3, 0}, {1, 0}},
        {GroupFamily::real(4), {6, 0}, {2, 0}},
        {GroupFamily::complex(3), {3, 2}, {2, 1}},
        {GroupFamily::quaternion(2), {5, 1}, {3, 1}},
        {GroupFamily::octonion(), {4, 2}, {2, 0}},
    };
    // per-family constants: Real 8/pi at n=4 is the closed/oracle ratio
    // of the trivial pair; others are 1 (Complex after dividing by n-1)
    for (const Probe& pr : probes) {
        double closed = restriction_norm_sq_closed(pr.g, pr.tau, pr.sigma).value;
        double oracle =
            restriction_norm_sq_oracle(pr.g, pr.tau, pr.sigma, 96).value;
        double expected_const = 1.0;
        switch (pr.g.kind) {
            case Family::Real: expected_const = 8.0 / M_PI; break;  // n = 4
            case Family::Complex: expected_const = pr.g.n - 1.0; break;
            default: break;
        }
        CHECK(closed / oracle ==
              doctest::Approx(expected_const).epsilon(1e-9));
    }
}

TEST_CASE("vanishing law: wrong-parity real pairs integrate to zero") {
    BoundedValue v =
        restriction_norm_sq_oracle(GroupFamily::real(4), {3, 0}, {0, 0}, 64);
    CHECK(std::abs(v.value) < 1e-12);
    CHECK(restriction_norm_sq_oracle(GroupFamily::complex(3), {2, 0}, {0, 1},
                                     64)
              .value == 0.0);
}

TEST_CASE("asymptotic comparators have bounded ratio to the closed forms") {
    for (const GroupFamily& g :
         {GroupFamily::real(4), GroupFamily::complex(3),
          GroupFamily::quaternion(2)}) {
        LType sigma =
            g.kind == Family::Quaternion ? LType{2, 2} : LType{2, 0};
        if (g.kind == Family::Complex) sigma = {2, 1};
        double lo = 1e300, hi = 0;
        for (const KType& tau : admissible_taus(g.kind, sigma, 400)) {
            if (tau.p < 300) continue;
            double c = restriction_norm_sq_closed(g, tau, sigma).value;
            double a = restriction_norm_asymptotic(g, tau, sigma);
            lo = std::min(lo, c / a);
            hi = std::max(hi, c / a);
        }
        CHECK(hi / lo < 1.1);  // stable ratio at large p
    }
}
