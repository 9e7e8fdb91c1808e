#pragma once

// Shared helpers for the test binaries: a portable deterministic uniform
// generator (the standard distributions are implementation-defined, raw
// bits are not) and significant-figure formatting for comparing against
// values quoted at limited precision.

#include <cstdio>
#include <random>
#include <string>

namespace testsup {

class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : gen_(seed) {}

    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double between(double lo, double hi) { return lo + (hi - lo) * unit(); }

    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// Value formatted to n significant figures, trailing zeros dropped; quoted
// expectations compare as strings ("0.021", "0.99", "4").
inline std::string sig_figs(double value, int n) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.*g", n, value);
    return buffer;
}

}  // namespace testsup
