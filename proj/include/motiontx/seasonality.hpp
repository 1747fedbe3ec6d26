#pragma once

#include "motiontx/series.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace motiontx {

struct SeasonalityReport {
    std::vector<double> acf;       ///< lags 0..max_lag
    std::vector<double> spectrum;  ///< bins 0..n/2
    std::size_t dominant_frequency = 0;  ///< cycles per sequence
    double reference_period = 0.0;       ///< frames per cycle, n / f
};

/// Biased sample autocorrelation, normalised by the lag-0 autocovariance.
std::vector<double> autocorrelation(const TimeSeries& series, std::size_t max_lag);

/// |DFT(x - mean)[k]|^2 / n for k = 0..n/2. Bin 0 is reported as exactly 0.
std::vector<double> power_spectrum(const TimeSeries& series);

/// Same quantity over all n bins (k = 0..n-1), bin 0 included as computed.
std::vector<double> full_power_spectrum(const TimeSeries& series);

/// argmax over bins 1..end of the one-sided spectrum; ties go to the lowest bin.
std::size_t dominant_frequency(std::span<const double> spectrum);

/// n / f. Requires 1 <= f <= n/2.
double reference_period(std::size_t n, std::size_t f);

/// ACF (max_lag defaults to n/2), spectrum, dominant frequency and period.
SeasonalityReport analyze_seasonality(const TimeSeries& series,
                                      std::optional<std::size_t> max_lag = std::nullopt);

} // namespace motiontx
