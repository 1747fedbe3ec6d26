#pragma once

#include "motiontx/table.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace motiontx {

/// Standard normal deviates from a 64-bit Mersenne Twister (std::mt19937_64,
/// whose output sequence is fixed by the C++ standard). Each deviate consumes
/// two raw draws: u1, u2 = (draw >> 11) * 2^-53, z = sqrt(-2 ln(1 - u1)) * cos(2 pi u2).
/// std::normal_distribution is not used because its algorithm is
/// implementation-defined.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform();  ///< [0, 1)
    double next();

private:
    std::mt19937_64 engine_;
};

struct SynthSpec {
    std::size_t n = 200;
    double period = 16.0;
    double trend_slope = 0.0;
    double amplitude = 1.0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    std::string channel = "theta";
};

struct SynthOutput {
    PoseTable noisy;  ///< trend + seasonal + noise
    PoseTable truth;  ///< trend + seasonal
};

/// value_t = trend_slope * t + amplitude * sin(2 pi t / period) + N(0, noise_sigma^2)
SynthOutput synth_generate(const SynthSpec& spec);

} // namespace motiontx
