#pragma once

// Monte Carlo check of the replication-probability reading of the intrinsic
// p-value: simulate a first study's posterior draw and a second identically
// designed study, and count how often the replication lands on the opposite
// side of zero.  The exact benchmark is Phi(-|estimate| / (sqrt(2) * se)).
//
// Randomness contract: draws come from std::mt19937_64 (bit-identical on
// every platform) driven through an explicit Box-Muller transform, since the
// standard library's normal_distribution is implementation-defined.  Work is
// split into fixed 65536-draw chunks; chunk k seeds its own generator from
// splitmix64(seed + (k + 1) * 0x9E3779B97F4A7C15), so partial sums can be
// computed by any number of workers in any order and still merge to the same
// count.

#include <cstdint>
#include <functional>

#include "ancred/special_functions.hpp"

namespace ancred {

struct SimulationConfig {
    double first_estimate = 0.0;   // observed estimate of the first study
    double std_error = 1.0;        // shared by both studies
    std::uint64_t num_draws = 1'000'000;
    std::uint64_t seed = 0;
};

struct SimulationResult {
    Probability flip_probability = 0.0;  // empirical Pr(sign flips)
    double monte_carlo_se = 0.0;         // sqrt(f * (1 - f) / n)
    Probability closed_form = 0.0;       // Phi(-|estimate| / (sqrt(2) * se))
    std::uint64_t num_draws = 0;
};

// Exact sign-flip probability; equals p_intrinsic(p)/2 for the study's
// two-sided p-value.  Throws std::invalid_argument unless std_error > 0.
Probability closed_form_flip(double first_estimate, double std_error);

// Two-stage simulation: per draw, theta ~ N(estimate, se^2), then a
// replication estimate ~ N(theta, se^2); counts draws whose sign disagrees
// with the first estimate.  Deterministic given the config, including the
// seed.  Throws std::invalid_argument for a zero first estimate (no defined
// direction) or invalid config.
SimulationResult simulate_replication(const SimulationConfig& config);

// Visits every simulated replication estimate in deterministic order,
// using exactly the streams simulate_replication consumes.  Intended for
// distribution-level checks.
void visit_replicates(const SimulationConfig& config,
                      const std::function<void(double)>& visit);

}  // namespace ancred
