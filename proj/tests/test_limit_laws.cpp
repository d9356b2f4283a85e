#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "partsamp/limit_laws.hpp"

using namespace partsamp;

TEST_CASE("cdf_sigma1 closed form") {
    CHECK(cdf_sigma1(0.0) == 0.0);
    CHECK(cdf_sigma1(-1.0) == 0.0);
    CHECK(cdf_sigma1(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cdf_sigma1(1.0) == doctest::Approx(0.6321205588285577).epsilon(1e-14));
}

TEST_CASE("cdf_sigma2 against the quadrature oracle") {
    CHECK(cdf_sigma2(0.0) == 0.0);
    // frozen oracle value at t = 1 (adaptive quadrature, 16 digits)
    CHECK(cdf_sigma2(1.0) == doctest::Approx(0.4726661388939345).epsilon(1e-12));
    CHECK(std::abs(cdf_sigma2(50.0) - 1.0) <= 1e-12);
    for (double t = 0.01; t <= 20.0; t *= 1.37)
        CHECK(cdf_sigma2(t) == doctest::Approx(oracle::debye_cdf_quadrature(t)).epsilon(1e-10));
    // both internal regimes stay consistent across the switch point
    CHECK(std::abs(cdf_sigma2(1.0 - 1e-9) - cdf_sigma2(1.0 + 1e-9)) < 1e-8);
}

TEST_CASE("cdf_sigma2 is monotone on a dense grid and maps into [0,1]") {
    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double t = 30.0 * i / 10000.0;
        const double v = cdf_sigma2(t);
        CHECK(v >= prev);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("normalized log laws clamp") {
    CHECK(cdf_sigma3_normalized(0.3) == 0.3);
    CHECK(cdf_sigma3_normalized(-1.0) == 0.0);
    CHECK(cdf_sigma3_normalized(2.0) == 1.0);
    CHECK(cdf_mult3_normalized(0.77) == 0.77);
}

TEST_CASE("multiplicity pmfs") {
    CHECK(pmf_mult1(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pmf_mult2(1) == doctest::Approx(6.0 * 3.0 / (M_PI * M_PI * 4.0)).epsilon(1e-14));
    CHECK_THROWS_AS(pmf_mult1(0), std::invalid_argument);
    CHECK_THROWS_AS(pmf_mult2(0), std::invalid_argument);

    // telescoping: sum_{m<=M} 1/(m(m+1)) = 1 - 1/(M+1), exact in rationals
    Rational acc(0);
    for (std::uint64_t m = 1; m <= 200; ++m) {
        Rational term(1, static_cast<unsigned long>(m * (m + 1)));
        term.canonicalize();
        acc += term;
        Rational expect = Rational(1) - Rational(1, static_cast<unsigned long>(m + 1));
        expect.canonicalize();
        CHECK(acc == expect);
    }

    // sum of pmf_mult2 converges to 1: partial sum + analytic tail bracket
    long double partial = 0.0L;
    const std::uint64_t M = 2000000;
    for (std::uint64_t m = M; m >= 1; --m) partial += static_cast<long double>(pmf_mult2(m));
    // tail = (6/pi^2) (1/(M+1) + sum_{m>M+1} 1/m^2), bracketed by integrals
    const long double c = 6.0L / (3.14159265358979323846L * 3.14159265358979323846L);
    const long double lo = c * (1.0L / (M + 1) + 1.0L / (M + 2));
    const long double hi = c * (1.0L / (M + 1) + 1.0L / (M + 1));
    CHECK(static_cast<double>(partial + lo) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(static_cast<double>(partial + hi) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("LimitLaw dispatch") {
    CHECK(LimitLaw{LawKind::Sigma1Exponential}.cdf(1.0) == cdf_sigma1(1.0));
    CHECK(LimitLaw{LawKind::Sigma2Debye}.cdf(1.0) == cdf_sigma2(1.0));
    CHECK(LimitLaw{LawKind::Mult1ZipfLike}.pmf(2) == pmf_mult1(2));
    CHECK_THROWS_AS(LimitLaw{LawKind::Mult1ZipfLike}.cdf(1.0), std::logic_error);
    CHECK_THROWS_AS(LimitLaw{LawKind::Sigma2Debye}.pmf(1), std::logic_error);
}

TEST_CASE("ks_distance hand-checked cases") {
    // point mass at 0 vs 1 - e^{-t}: sup at 0+ is 1
    EmpiricalCdf point(std::vector<double>(10, 0.0));
    CHECK(ks_distance(point, cdf_sigma1) == doctest::Approx(1.0).epsilon(1e-15));

    // ten atoms at decile midpoints vs the identity CDF: sup is 0.05
    std::vector<double> grid;
    for (int i = 0; i < 10; ++i) grid.push_back(0.05 + 0.1 * i);
    EmpiricalCdf mid(grid);
    CHECK(ks_distance(mid, cdf_sigma3_normalized) == doctest::Approx(0.05).epsilon(1e-12));

    // sampling a law at its own quantiles keeps KS <= 1/N
    const std::size_t N = 1000;
    std::vector<double> quantiles;
    for (std::size_t i = 1; i <= N; ++i)
        quantiles.push_back(-std::log1p(-(static_cast<double>(i) - 0.5) / N));
    EmpiricalCdf own(quantiles);
    CHECK(ks_distance(own, cdf_sigma1) <= 1.0 / N + 1e-12);
}

TEST_CASE("ks_distance_windowed restricts evaluation") {
    EmpiricalCdf point(std::vector<double>(5, 0.0));
    // the unit jump at 0 is outside [0.05, 0.95]; only F-hat - t remains
    CHECK(ks_distance_windowed(point, cdf_sigma3_normalized, 0.05, 0.95) ==
          doctest::Approx(0.95).epsilon(1e-12));
    CHECK(ks_distance(point, cdf_sigma3_normalized) == doctest::Approx(1.0).epsilon(1e-12));
}
