#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace motiontx {

/// One real-valued, uniformly sampled channel. The frame index is the only
/// abscissa. Construction rejects empty input and non-finite samples.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool operator==(const TimeSeries&) const = default;

private:
    std::vector<double> values_;
};

/// Original-unit bounds of a channel; max must exceed min.
struct ScaleParams {
    double min = 0.0;
    double max = 1.0;

    void validate() const;
};

/// Range below which a series is treated as constant.
inline constexpr double kConstantRangeTolerance = 1e-12;

std::pair<TimeSeries, ScaleParams> normalize_minmax(const TimeSeries& series);
TimeSeries denormalize(const TimeSeries& series, const ScaleParams& params);

/// Centered moving average. Boundary samples average the clipped window
/// [max(0, i-r), min(n-1, i+r)].
TimeSeries mean_smoothing(const TimeSeries& series, std::size_t radius);

/// Weighted window: alpha on the center sample, (1-alpha)/(2r) on each of
/// the 2r neighbours. The first and last r samples are copied unchanged.
TimeSeries exponential_smoothing(const TimeSeries& series, double alpha, std::size_t radius);

/// Neighbour weight used by exponential_smoothing.
double exponential_neighbor_weight(double alpha, std::size_t radius);

/// max(1, round(period / 8))
std::size_t default_smoothing_radius(double reference_period);

} // namespace motiontx
