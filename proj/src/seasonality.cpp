#include "motiontx/seasonality.hpp"

#include "motiontx/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace motiontx {

namespace {

void require_non_constant(const TimeSeries& series) {
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    if (*hi - *lo < kConstantRangeTolerance) {
        throw Error(ErrorCode::ConstantSeries, "series has zero variance");
    }
}

std::vector<double> centered(const TimeSeries& series) {
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) /
                        static_cast<double>(series.size());
    std::vector<double> out(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out[i] = series[i] - mean;
    }
    return out;
}

// Direct DFT power over the first `bins` bins. Twiddles are tabulated once and
// indexed by (k * t) mod n so that every angle is reduced exactly.
std::vector<double> dft_power(const std::vector<double>& x, std::size_t bins) {
    const std::size_t n = x.size();
    std::vector<double> cos_table(n);
    std::vector<double> sin_table(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        cos_table[m] = std::cos(angle);
        sin_table[m] = std::sin(angle);
    }

    std::vector<double> power(bins);
    for (std::size_t k = 0; k < bins; ++k) {
        double re = 0.0;
        double im = 0.0;
        std::size_t index = 0;
        for (std::size_t t = 0; t < n; ++t) {
            re += x[t] * cos_table[index];
            im -= x[t] * sin_table[index];
            index += k;
            if (index >= n) {
                index %= n;
            }
        }
        power[k] = (re * re + im * im) / static_cast<double>(n);
    }
    return power;
}

void require_spectrum_input(const TimeSeries& series) {
    if (series.size() < 4) {
        throw Error(ErrorCode::SeriesTooShort, "power spectrum needs at least 4 samples");
    }
    require_non_constant(series);
}

} // namespace

std::vector<double> autocorrelation(const TimeSeries& series, std::size_t max_lag) {
    const std::size_t n = series.size();
    if (max_lag >= n) {
        throw Error(ErrorCode::LagTooLarge,
                    "max_lag " + std::to_string(max_lag) + " >= length " + std::to_string(n));
    }
    require_non_constant(series);

    const auto x = centered(series);
    double variance = 0.0;
    for (double v : x) {
        variance += v * v;
    }
    if (variance <= 0.0) {
        throw Error(ErrorCode::ConstantSeries, "series has zero variance");
    }

    std::vector<double> acf(max_lag + 1);
    acf[0] = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double sum = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) {
            sum += x[t] * x[t + k];
        }
        acf[k] = sum / variance;
    }
    return acf;
}

std::vector<double> power_spectrum(const TimeSeries& series) {
    require_spectrum_input(series);
    auto spectrum = dft_power(centered(series), series.size() / 2 + 1);
    spectrum[0] = 0.0;
    return spectrum;
}

std::vector<double> full_power_spectrum(const TimeSeries& series) {
    require_spectrum_input(series);
    return dft_power(centered(series), series.size());
}

std::size_t dominant_frequency(std::span<const double> spectrum) {
    if (spectrum.size() < 3) {
        throw Error(ErrorCode::SpectrumTooShort, "need at least 2 bins beyond bin 0");
    }
    std::size_t best = 1;
    for (std::size_t k = 2; k < spectrum.size(); ++k) {
        if (spectrum[k] > spectrum[best]) {
            best = k;
        }
    }
    return best;
}

double reference_period(std::size_t n, std::size_t f) {
    if (f < 1 || f > n / 2) {
        throw Error(ErrorCode::InvalidFrequency,
                    "frequency " + std::to_string(f) + " outside [1, " + std::to_string(n / 2) + "]");
    }
    return static_cast<double>(n) / static_cast<double>(f);
}

SeasonalityReport analyze_seasonality(const TimeSeries& series, std::optional<std::size_t> max_lag) {
    SeasonalityReport report;
    report.spectrum = power_spectrum(series);
    report.acf = autocorrelation(series, max_lag.value_or(series.size() / 2));
    report.dominant_frequency = dominant_frequency(report.spectrum);
    report.reference_period = reference_period(series.size(), report.dominant_frequency);
    return report;
}

} // namespace motiontx
