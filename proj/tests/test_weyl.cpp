#include <doctest.h>

#include "rankone/corefn.hpp"
#include "rankone/weyl.hpp"

using namespace rankone;

TEST_CASE("weyl dimension formula on known representations") {
    CHECK(weyl_dim({RootType::A, 2}, HighestWeight::of({1, 0})) == 2);
    CHECK(weyl_dim({RootType::A, 3}, HighestWeight::of({1, 0, 0})) == 3);
    CHECK(weyl_dim({RootType::B, 4}, HighestWeight::of({0, 0, 0, 0})) == 1);
    CHECK(weyl_dim({RootType::B, 4}, HighestWeight::halves({1, 1, 1, 1})) ==
          16);  // spin representation of so(9)
    CHECK(weyl_dim({RootType::D, 4}, HighestWeight::of({1, 0, 0, 0})) == 8);
    CHECK(weyl_dim({RootType::C, 2}, HighestWeight::of({1, 0})) == 4);
}

TEST_CASE("non-dominant weights are rejected") {
    CHECK_THROWS_AS(weyl_dim({RootType::B, 2}, HighestWeight::of({0, 1})),
                    DominanceError);
    CHECK_THROWS_AS(weyl_dim({RootType::B, 2}, HighestWeight::of({1, -1})),
                    DominanceError);
    // D allows a negative last coordinate within dominance
    CHECK(weyl_dim({RootType::D, 4}, HighestWeight::of({1, 1, 1, -1})) ==
          weyl_dim({RootType::D, 4}, HighestWeight::of({1, 1, 1, 1})));
}

TEST_CASE("harmonic dimensions match the binomial formula") {
    CHECK(harmonic_dim(3, 2) == 5);
    CHECK(harmonic_dim(4, 1) == 4);
    for (int n = 3; n <= 10; ++n)
        for (int p = 0; p <= 30; ++p) {
            int rank = n / 2;
            std::vector<long> w(rank, 0);
            w[0] = p;
            RootSystem rs{n % 2 ? RootType::B : RootType::D, rank};
            CHECK(weyl_dim(rs, HighestWeight::of(w)) ==
                  Rational(harmonic_dim(n, p)));
        }
}

TEST_CASE("k-type dimensions per family") {
    CHECK(ktype_dim(GroupFamily::real(3), {2, 0}) == 5);
    CHECK(ktype_dim(GroupFamily::real(5), {1, 0}) == 5);  // defining rep
    // Complex rank 2: dim = p + q + 1
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; q <= 6; ++q)
            CHECK(ktype_dim(GroupFamily::complex(2), {p, q}) ==
                  Rational(p + q + 1));
    CHECK(ktype_dim(GroupFamily::quaternion(2), {2, 0}) == 5);
    CHECK(ktype_dim(GroupFamily::quaternion(2), {1, 1}) == 8);
    CHECK(ktype_dim(GroupFamily::quaternion(2), {2, 2}) == 30);
    CHECK(ktype_dim(GroupFamily::octonion(), {1, 1}) == 16);
    CHECK(ktype_dim(GroupFamily::octonion(), {2, 0}) == 9);
}

TEST_CASE("l-type dimensions per family") {
    CHECK(ltype_dim(GroupFamily::real(4), {0, 0}) == 1);
    CHECK(ltype_dim(GroupFamily::real(4), {2, 0}) == 5);  // SO(3) harmonics
    CHECK(ltype_dim(GroupFamily::octonion(), {1, 0}) == 8);
    // SO(8) harmonics: (q+3)(q+1)_5/360
    for (int q = 0; q <= 20; ++q)
        CHECK(ltype_dim(GroupFamily::octonion(), {q, 0}) ==
              Rational(q + 3) * pochhammer(Rational(q + 1), 5) / 360);
    // Quaternion L = Sp(n-1) x Sp(1)
    CHECK(ltype_dim(GroupFamily::quaternion(2), {0, 0}) == 1);
    CHECK(ltype_dim(GroupFamily::quaternion(2), {1, 1}) == 4);  // Sp(1)xSp(1)
}

TEST_CASE("triality: the two D4 weights share a dimension") {
    for (int q = 0; q <= 30; ++q) {
        std::vector<long> w(4, 0);
        w[0] = q;
        CHECK(weyl_dim({RootType::D, 4}, HighestWeight::of(w)) ==
              weyl_dim({RootType::D, 4}, HighestWeight::halves({q, q, q, q})));
    }
}

TEST_CASE("printed spin(9) product audit") {
    GroupFamily g = GroupFamily::octonion();
    CHECK(printed_dim_ratio(g, {0, 0}).value == doctest::Approx(1.0));
    CHECK(printed_dim_ratio(g, {1, 1}).value ==
          doctest::Approx(10.5 / 16.0));  // = 21/32
    CHECK(printed_dim_ratio(g, {2, 0}).value == doctest::Approx(1.0));
    // the ratio is q-dependent, so the printed product is not proportional
    // to the true dimension
    CHECK(printed_dim_ratio(g, {2, 2}).value == doctest::Approx(0.5));
}
