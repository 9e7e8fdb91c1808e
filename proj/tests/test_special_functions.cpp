#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ancred/special_functions.hpp"
#include "oracle.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using ancred::chisq1_upper_tail;
using ancred::Probability;
using ancred::std_normal_cdf;
using ancred::std_normal_quantile;

TEST_CASE("probability type enforces its range") {
    CHECK_NOTHROW(Probability(0.0));
    CHECK_NOTHROW(Probability(1.0));
    CHECK_THROWS_AS(Probability(-1e-12), std::domain_error);
    CHECK_THROWS_AS(Probability(1.0 + 1e-12), std::domain_error);
    CHECK_THROWS_AS(Probability(std::nan("")), std::domain_error);
    CHECK(double(Probability(0.25)) == 0.25);
}

TEST_CASE("normal cdf hits the frozen high-precision values") {
    CHECK(std_normal_cdf(0.0) == 0.5);
    for (const auto& point : refs::kNormalCdf)
        CHECK(std::fabs(std_normal_cdf(point.x) - point.phi) <= 1e-13);
    CHECK(std::fabs(std_normal_cdf(1.959964) - refs::kPhiAt1959964) <= 1e-13);
}

TEST_CASE("normal cdf matches the quadrature oracle on random points") {
    testsup::Uniform rng(0x5eedf00d);
    for (int i = 0; i < 300; ++i) {
        const double x = rng.between(-8.0, 8.0);
        const double expected = static_cast<double>(oracle::normal_cdf(x));
        CHECK(std::fabs(std_normal_cdf(x) - expected) <= 1e-13);
    }
}

TEST_CASE("normal cdf symmetry: cdf(x) + cdf(-x) = 1") {
    for (double x = 0.0; x <= 8.5; x += 1e-3)
        CHECK(std::fabs(std_normal_cdf(x) + std_normal_cdf(-x) - 1.0) <= 1e-14);
}

TEST_CASE("normal cdf is monotone non-decreasing") {
    double previous = std_normal_cdf(-8.5);
    for (double x = -8.5 + 1e-3; x <= 8.5; x += 1e-3) {
        const double current = std_normal_cdf(x);
        CHECK(current >= previous);
        previous = current;
    }
}

TEST_CASE("normal cdf rejects non-finite input") {
    CHECK_THROWS_AS(std_normal_cdf(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(std_normal_cdf(INFINITY), std::domain_error);
    CHECK_THROWS_AS(std_normal_cdf(-INFINITY), std::domain_error);
}

TEST_CASE("normal quantile hits the frozen values") {
    CHECK(std_normal_quantile(0.5) == 0.0);
    for (const auto& point : refs::kNormalQuantile)
        CHECK(std_normal_quantile(point.p) ==
              doctest::Approx(point.z).epsilon(1e-12).scale(1.0));
    CHECK(std::fabs(std_normal_quantile(0.975) - refs::kZ975) <= 1e-12);
    CHECK(std::fabs(std_normal_quantile(0.95) - refs::kZ95) <= 1e-12);
}

TEST_CASE("quantile round trip: cdf(quantile(p)) = p") {
    // linear sweep through the bulk plus log-spaced tails down to 1e-12
    for (double p = 1e-4; p < 1.0; p += 1e-4)
        CHECK(std::fabs(std_normal_cdf(std_normal_quantile(p)) - p) <= 1e-10);
    for (double p = 1e-12; p < 1e-4; p *= 1.5) {
        CHECK(std::fabs(std_normal_cdf(std_normal_quantile(p)) - p) <= 1e-10);
        CHECK(std::fabs(std_normal_cdf(std_normal_quantile(1.0 - p)) - (1.0 - p)) <= 1e-10);
    }
}

TEST_CASE("quantile of cdf recovers x") {
    // Lower half is exact to the quantile's own accuracy; above zero the
    // spacing of doubles near p = 1 limits what any implementation can do.
    for (double x = -6.0; x <= 0.0; x += 1e-2)
        CHECK(std::fabs(std_normal_quantile(std_normal_cdf(x)) - x) <= 1e-10);
    for (double x = 0.0; x <= 6.0; x += 1e-2)
        CHECK(std::fabs(std_normal_quantile(std_normal_cdf(x)) - x) <= 1e-7);
}

TEST_CASE("quantile is monotone non-decreasing") {
    double previous = std_normal_quantile(1e-6);
    for (double p = 1e-6 + 1e-5; p < 1.0 - 1e-6; p += 1e-5) {
        const double current = std_normal_quantile(p);
        CHECK(current >= previous);
        previous = current;
    }
}

TEST_CASE("quantile stays finite in the extreme tails") {
    CHECK(std::isfinite(std_normal_quantile(1e-300)));
    CHECK(std::isfinite(std_normal_quantile(1.0 - 1e-16)));
    CHECK(std_normal_quantile(1e-300) < -36.0);
}

TEST_CASE("quantile rejects the closed endpoints") {
    CHECK_THROWS_AS(std_normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(-0.1), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(1.1), std::domain_error);
    CHECK_THROWS_AS(std_normal_quantile(std::nan("")), std::domain_error);
}

TEST_CASE("chi-squared(1) upper tail: frozen values and full support") {
    CHECK(chisq1_upper_tail(0.0) == 1.0);
    for (const auto& point : refs::kChi1Tail)
        CHECK(std::fabs(chisq1_upper_tail(point.x) - point.tail) <= 1e-13);
    // the two-sided 5% cut: tail(z_{0.025}^2) = 0.05
    CHECK(std::fabs(chisq1_upper_tail(refs::kZ975Sq) - 0.05) <= 1e-12);
}

TEST_CASE("chi-squared(1) tail agrees with 2*(1 - cdf(sqrt(x)))") {
    for (double x = 0.0; x <= 64.0; x += 0.05) {
        const double via_cdf = 2.0 * (1.0 - std_normal_cdf(std::sqrt(x)));
        CHECK(std::fabs(chisq1_upper_tail(x) - via_cdf) <= 1e-13);
    }
}

TEST_CASE("chi-squared(1) tail matches the quadrature oracle") {
    testsup::Uniform rng(0xfeedbeef);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.between(0.0, 64.0);
        CHECK(chisq1_upper_tail(x) ==
              doctest::Approx(oracle::chisq1_tail(x)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("chi-squared(1) tail is monotone non-increasing") {
    double previous = chisq1_upper_tail(0.0);
    for (double x = 0.01; x <= 64.0; x += 0.01) {
        const double current = chisq1_upper_tail(x);
        CHECK(current <= previous);
        previous = current;
    }
}

TEST_CASE("chi-squared(1) tail rejects negative and non-finite input") {
    CHECK_THROWS_AS(chisq1_upper_tail(-1e-9), std::domain_error);
    CHECK_THROWS_AS(chisq1_upper_tail(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(chisq1_upper_tail(INFINITY), std::domain_error);
}
