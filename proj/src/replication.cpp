#include "ancred/replication.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ancred {

namespace {

constexpr double kSqrt1_2 = 0.70710678118654752440;
constexpr double kTwoPi = 6.28318530717958647693;
constexpr std::uint64_t kChunkDraws = 1u << 16;
constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937_64 chunk_generator(std::uint64_t seed, std::uint64_t chunk_index) {
    return std::mt19937_64(splitmix64(seed + (chunk_index + 1) * kSeedGamma));
}

double uniform_open(std::mt19937_64& gen) {  // (0, 1]
    return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
}

double uniform_half_open(std::mt19937_64& gen) {  // [0, 1)
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct NormalPair {
    double first, second;
};

NormalPair box_muller(std::mt19937_64& gen) {
    const double radius = std::sqrt(-2.0 * std::log(uniform_open(gen)));
    const double angle = kTwoPi * uniform_half_open(gen);
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

void validate(const SimulationConfig& config) {
    if (!std::isfinite(config.first_estimate) || !std::isfinite(config.std_error))
        throw std::invalid_argument("simulation inputs must be finite");
    if (!(config.std_error > 0.0))
        throw std::invalid_argument("standard error must be > 0");
    if (config.num_draws == 0)
        throw std::invalid_argument("num_draws must be >= 1");
}

// Replication estimates for one chunk, in stream order.
template <typename Visit>
void visit_chunk(const SimulationConfig& config, std::uint64_t chunk_index,
                 std::uint64_t draws, Visit&& visit) {
    auto gen = chunk_generator(config.seed, chunk_index);
    for (std::uint64_t i = 0; i < draws; ++i) {
        const NormalPair z = box_muller(gen);
        const double theta = config.first_estimate + config.std_error * z.first;
        visit(theta + config.std_error * z.second);
    }
}

std::uint64_t chunk_draws_at(std::uint64_t total, std::uint64_t chunk_index) {
    const std::uint64_t begin = chunk_index * kChunkDraws;
    return std::min(kChunkDraws, total - begin);
}

}  // namespace

Probability closed_form_flip(double first_estimate, double std_error) {
    if (!std::isfinite(first_estimate) || !(std_error > 0.0))
        throw std::invalid_argument("closed_form_flip: requires finite estimate and std_error > 0");
    return std_normal_cdf(-std::fabs(first_estimate) / std_error * kSqrt1_2);
}

SimulationResult simulate_replication(const SimulationConfig& config) {
    validate(config);
    if (config.first_estimate == 0.0)
        throw std::invalid_argument("simulate_replication: first estimate of zero has no direction to replicate");

    const bool positive = config.first_estimate > 0.0;
    const std::uint64_t num_chunks = (config.num_draws + kChunkDraws - 1) / kChunkDraws;

    // Each chunk has its own generator and the merge is plain addition, so
    // the total is the same for any worker count or scheduling order.
    const std::uint64_t num_workers =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(), num_chunks));
    std::vector<std::future<std::uint64_t>> tasks;
    tasks.reserve(num_workers);
    for (std::uint64_t w = 0; w < num_workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            std::uint64_t flips = 0;
            for (std::uint64_t c = w; c < num_chunks; c += num_workers) {
                visit_chunk(config, c, chunk_draws_at(config.num_draws, c), [&](double rep) {
                    flips += positive ? (rep <= 0.0) : (rep >= 0.0);
                });
            }
            return flips;
        }));
    }
    std::uint64_t flips = 0;
    for (auto& task : tasks) flips += task.get();

    const double n = static_cast<double>(config.num_draws);
    const double f = static_cast<double>(flips) / n;
    SimulationResult result;
    result.flip_probability = f;
    result.monte_carlo_se = std::sqrt(f * (1.0 - f) / n);
    result.closed_form = closed_form_flip(config.first_estimate, config.std_error);
    result.num_draws = config.num_draws;
    return result;
}

void visit_replicates(const SimulationConfig& config,
                      const std::function<void(double)>& visit) {
    validate(config);
    const std::uint64_t num_chunks = (config.num_draws + kChunkDraws - 1) / kChunkDraws;
    for (std::uint64_t c = 0; c < num_chunks; ++c)
        visit_chunk(config, c, chunk_draws_at(config.num_draws, c), visit);
}

}  // namespace ancred
