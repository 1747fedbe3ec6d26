#include "motiontx/series.hpp"

#include "motiontx/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace motiontx {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw Error(ErrorCode::InvalidSeries, "series must contain at least one sample");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorCode::InvalidSeries,
                        "non-finite sample at frame " + std::to_string(i));
        }
    }
}

void ScaleParams::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
        throw Error(ErrorCode::InvalidArgument, "scale params require finite max > min");
    }
}

std::pair<TimeSeries, ScaleParams> normalize_minmax(const TimeSeries& series) {
    if (series.size() < 2) {
        throw Error(ErrorCode::SeriesTooShort, "normalization needs at least 2 samples");
    }
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    const ScaleParams params{*lo, *hi};
    const double range = params.max - params.min;
    if (range < kConstantRangeTolerance) {
        throw Error(ErrorCode::ConstantSeries, "series has zero range");
    }

    std::vector<double> out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out[i] = std::clamp((series[i] - params.min) / range, 0.0, 1.0);
    }
    // Pin the extremes so that min -> 0 and max -> 1 hold exactly.
    out[static_cast<std::size_t>(lo - series.begin())] = 0.0;
    out[static_cast<std::size_t>(hi - series.begin())] = 1.0;
    return {TimeSeries(std::move(out)), params};
}

TimeSeries denormalize(const TimeSeries& series, const ScaleParams& params) {
    params.validate();
    const double range = params.max - params.min;
    std::vector<double> out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out[i] = params.min + series[i] * range;
    }
    return TimeSeries(std::move(out));
}

TimeSeries mean_smoothing(const TimeSeries& series, std::size_t radius) {
    const std::size_t n = series.size();
    if (radius >= n) {
        throw Error(ErrorCode::RadiusTooLarge,
                    "radius " + std::to_string(radius) + " >= length " + std::to_string(n));
    }
    if (radius == 0) {
        return series;
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t first = i >= radius ? i - radius : 0;
        const std::size_t last = std::min(n - 1, i + radius);
        double sum = 0.0;
        double lo = series[first];
        double hi = series[first];
        for (std::size_t j = first; j <= last; ++j) {
            sum += series[j];
            lo = std::min(lo, series[j]);
            hi = std::max(hi, series[j]);
        }
        // The exact mean lies in [lo, hi]; the clamp removes rounding drift
        // so constant windows reproduce their value bit for bit.
        out[i] = std::clamp(sum / static_cast<double>(last - first + 1), lo, hi);
    }
    return TimeSeries(std::move(out));
}

double exponential_neighbor_weight(double alpha, std::size_t radius) {
    return (1.0 - alpha) / (2.0 * static_cast<double>(radius));
}

TimeSeries exponential_smoothing(const TimeSeries& series, double alpha, std::size_t radius) {
    const std::size_t n = series.size();
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1]");
    }
    if (radius == 0) {
        throw Error(ErrorCode::InvalidArgument, "exponential smoothing radius must be positive");
    }
    if (radius >= n) {
        throw Error(ErrorCode::RadiusTooLarge,
                    "radius " + std::to_string(radius) + " >= length " + std::to_string(n));
    }

    const double beta = exponential_neighbor_weight(alpha, radius);
    std::vector<double> out(series.begin(), series.end());
    for (std::size_t i = radius; i + radius < n; ++i) {
        double neighbours = 0.0;
        double lo = series[i];
        double hi = series[i];
        for (std::size_t j = 1; j <= radius; ++j) {
            neighbours += series[i - j] + series[i + j];
            lo = std::min({lo, series[i - j], series[i + j]});
            hi = std::max({hi, series[i - j], series[i + j]});
        }
        out[i] = std::clamp(alpha * series[i] + beta * neighbours, lo, hi);
    }
    return TimeSeries(std::move(out));
}

std::size_t default_smoothing_radius(double reference_period) {
    const double r = std::round(reference_period / 8.0);
    return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

} // namespace motiontx
