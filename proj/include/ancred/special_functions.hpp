#pragma once

// Standard normal CDF, its inverse, and the chi-squared(1) upper tail.
// Everything else in the library is built on these three functions, so they
// are pinned to tight accuracy contracts:
//   std_normal_cdf      absolute error <= 1e-12 on |x| <= 8
//   std_normal_quantile |cdf(quantile(p)) - p| <= 1e-10 on [1e-12, 1 - 1e-12]
//   chisq1_upper_tail   matches 2*(1 - cdf(sqrt(x))) to <= 1e-13 on [0, 64]
//
// All functions are pure and thread-safe.

#include <stdexcept>

namespace ancred {

// A probability in [0, 1].  Validates on construction and converts
// implicitly to double so it can be used directly in arithmetic.
class Probability {
public:
    Probability(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::domain_error("probability outside [0, 1]");
    }

    operator double() const noexcept { return value_; }
    double value() const noexcept { return value_; }

private:
    double value_;
};

// Phi(x), via the complementary error function so that both tails keep
// full relative accuracy.  Throws std::domain_error on non-finite input.
Probability std_normal_cdf(double x);

// Phi^-1(p) for p in (0, 1).  Rational approximation refined with one
// Halley step against std_normal_cdf, which enforces the round-trip
// contract by construction.  Throws std::domain_error outside (0, 1).
double std_normal_quantile(double p);

// Pr(chi^2(1) >= x) for x >= 0, evaluated directly in the tail as
// erfc(sqrt(x/2)).  Throws std::domain_error for negative or non-finite x.
Probability chisq1_upper_tail(double x);

}  // namespace ancred
