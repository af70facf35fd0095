#include <doctest.h>

#include <cmath>

#include "rankone/criterion.hpp"

using namespace rankone;

namespace {

// exhaustive stream-vs-direct comparison for one configuration
void check_stream(const GroupFamily& g, const NuParameter& nu,
                  const LType& sigma, long p_max) {
    std::vector<double> stream = criterion_term_series(g, nu, sigma, p_max);
    std::vector<KType> taus = admissible_taus(g.kind, sigma, p_max);
    REQUIRE(stream.size() == taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
        double direct = criterion_term(g, nu, taus[i], sigma).value;
        INFO("tau index ", i);
        CHECK(stream[i] ==
              doctest::Approx(direct).epsilon(1e-10).scale(
                  std::max(std::abs(direct), 1e-300)));
    }
}

}  // namespace

TEST_CASE("term streams match the exact per-term values") {
    check_stream(GroupFamily::real(4),
                 NuParameter::complementary(Rational(1, 2)), {3, 0}, 60);
    check_stream(GroupFamily::real(5), NuParameter::quotient(Family::Real, 1),
                 {4, 0}, 60);
    check_stream(GroupFamily::complex(3),
                 NuParameter::complementary(Rational(1, 2)), {2, 1}, 60);
    check_stream(GroupFamily::complex(3),
                 NuParameter::quotient(Family::Complex, 1), {3, 2}, 60);
    check_stream(GroupFamily::complex(3),
                 NuParameter::quotient(Family::Complex, 0), {2, 1}, 60);
    check_stream(GroupFamily::quaternion(2),
                 NuParameter::complementary(Rational(5, 2)), {3, 1}, 60);
    check_stream(GroupFamily::quaternion(2),
                 NuParameter::quotient(Family::Quaternion, 0), {4, 0}, 60);
    check_stream(GroupFamily::quaternion(2),
                 NuParameter::quotient(Family::Quaternion, -1), {2, 0}, 60);
    check_stream(GroupFamily::octonion(),
                 NuParameter::complementary(Rational(13, 2)), {3, 0}, 60);
}

TEST_CASE("octonion single-term normalization") {
    BoundedValue t = criterion_term(GroupFamily::octonion(),
                                    NuParameter::complementary(Rational(13, 2)),
                                    {0, 0}, {0, 0});
    CHECK(t.value == 1.0);
    CHECK(t.radius <= 1e-15);
}

TEST_CASE("kernel terms vanish in quotient regimes") {
    GroupFamily r5 = GroupFamily::real(5);
    NuParameter nu = NuParameter::quotient(Family::Real, 1);
    CHECK(criterion_term(r5, nu, {1, 0}, {1, 0}).value == 0.0);
    std::vector<double> stream = criterion_term_series(r5, nu, {1, 0}, 20);
    CHECK(stream[0] == 0.0);  // p = 1 lies in the kernel
    CHECK(stream[1] > 0.0);
}

TEST_CASE("criterion sums converge inside the embedding ranges") {
    CriterionReport rep =
        criterion_sum(GroupFamily::real(4),
                      NuParameter::complementary(Rational(1, 2)), {0, 0}, 4000);
    CHECK_FALSE(rep.diverged);
    CHECK(rep.gamma_fit > 1.5);
    CHECK(rep.ratio == doctest::Approx(3.0).epsilon(0.01));
    CHECK(rep.tail_estimate < 0.01 * rep.partial_sum.value);
}

TEST_CASE("divergence above the threshold") {
    CriterionReport rep =
        criterion_sum(GroupFamily::real(4),
                      NuParameter::complementary(Rational(3, 2)), {0, 0}, 4000);
    CHECK(rep.diverged);
    CHECK(std::isinf(rep.ratio));
    double e = partial_sum_growth_exponent(
        GroupFamily::real(4), NuParameter::complementary(Rational(3, 2)),
        {0, 0}, 10000);
    CHECK(e == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("sweep grids exclude flat kernels in quotient regimes") {
    GroupFamily r5 = GroupFamily::real(5);
    NuParameter nu = NuParameter::quotient(Family::Real, 1);
    for (const LType& sg : sweep_sigma_grid(r5, nu, 10))
        CHECK_FALSE(in_quotient_kernel_flat(Family::Real, 1, sg));
    // complementary grids are complete
    CHECK(sweep_sigma_grid(r5, NuParameter::complementary(1), 10).size() == 11);
    // quaternion grid respects s - t parity
    for (const LType& sg : sweep_sigma_grid(GroupFamily::quaternion(2),
                                            NuParameter::complementary(3), 8))
        CHECK((sg.s - sg.t) % 2 == 0);
}

TEST_CASE("sweep verdicts at moderate size") {
    SweepReport ok = boundedness_sweep(
        GroupFamily::real(4), NuParameter::complementary(Rational(1, 2)), 40,
        2000, 2);
    CHECK(ok.verdict == Verdict::bounded_evidence);
    CHECK(ok.plateau_drift < 0.1);

    SweepReport bad = boundedness_sweep(
        GroupFamily::octonion(), NuParameter::complementary(Rational(15, 2)),
        20, 2000, 2);
    CHECK(bad.verdict == Verdict::divergent);
}

TEST_CASE("sweep results are independent of the job count") {
    for (unsigned jobs : {1u, 3u}) {
        static SweepReport first;
        SweepReport sw = boundedness_sweep(
            GroupFamily::complex(3), NuParameter::complementary(Rational(1, 2)),
            8, 500, jobs);
        if (jobs == 1u) {
            first = sw;
            continue;
        }
        REQUIRE(sw.reports.size() == first.reports.size());
        for (std::size_t i = 0; i < sw.reports.size(); ++i) {
            CHECK(sw.reports[i].partial_sum.value ==
                  first.reports[i].partial_sum.value);
            CHECK(sw.reports[i].ratio == first.reports[i].ratio);
        }
        CHECK(sw.sup_ratio == first.sup_ratio);
    }
}

TEST_CASE("summation-lemma sups stabilize exactly for valid exponents") {
    Lemma35Report good = lemma35_check(0.75, 0.75, 2.0, 400);
    CHECK(good.alpha_beta_stabilized);
    CHECK(good.gamma_stabilized);
    CHECK(good.sup_gamma == doctest::Approx(M_PI * M_PI / 6).epsilon(0.01));
    Lemma35Report bad = lemma35_check(0.5, 0.25, 2.0, 400);
    CHECK_FALSE(bad.alpha_beta_stabilized);
}
