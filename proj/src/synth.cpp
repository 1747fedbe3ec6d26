#include "motiontx/synth.hpp"

#include "motiontx/error.hpp"

#include <cmath>
#include <numbers>

namespace motiontx {

double GaussianSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSource::next() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SynthOutput synth_generate(const SynthSpec& spec) {
    if (!std::isfinite(spec.period) || spec.period < 4.0) {
        throw Error(ErrorCode::InvalidSpec, "period must be at least 4 frames");
    }
    if (static_cast<double>(spec.n) < 2.0 * spec.period) {
        throw Error(ErrorCode::InvalidSpec, "n must cover at least two periods");
    }
    if (!std::isfinite(spec.trend_slope) || !std::isfinite(spec.amplitude) || !std::isfinite(spec.noise_sigma) ||
        spec.noise_sigma < 0.0) {
        throw Error(ErrorCode::InvalidSpec, "slope, amplitude and noise sigma must be finite, sigma >= 0");
    }
    if (spec.channel.empty()) {
        throw Error(ErrorCode::InvalidSpec, "channel name must be non-empty");
    }

    SynthOutput out;
    for (auto* table : {&out.noisy, &out.truth}) {
        table->channel_names = {spec.channel};
        table->columns.assign(1, std::vector<double>(spec.n));
        table->frames = spec.n;
    }
    GaussianSource noise(spec.seed);
    for (std::size_t t = 0; t < spec.n; ++t) {
        const double frame = static_cast<double>(t);
        const double clean = spec.trend_slope * frame +
                             spec.amplitude * std::sin(2.0 * std::numbers::pi * frame / spec.period);
        out.truth.columns[0][t] = clean;
        out.noisy.columns[0][t] = spec.noise_sigma > 0.0 ? clean + spec.noise_sigma * noise.next() : clean;
    }
    return out;
}

} // namespace motiontx
