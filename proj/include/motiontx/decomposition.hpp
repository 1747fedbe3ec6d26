#pragma once

#include "motiontx/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace motiontx {

/// Polynomial long-term trend fitted against the frame index. Coefficients
/// are in the scaled abscissa u = (t - center) / half_span, which maps the
/// frames 0..n-1 onto [-1, 1].
struct TrendModel {
    std::vector<double> coefficients;  ///< c_0..c_order
    std::size_t order = 0;
    bool fallback = false;  ///< no candidate order met the coefficient band
    double center = 0.0;
    double half_span = 1.0;
    std::vector<double> trend_values;

    double evaluate(double frame) const;
};

/// Lower bound of the admissible leading-coefficient band.
inline constexpr double kLeadingCoefficientFloor = 1e-10;

/// Least-squares polynomial trend. The order is the highest candidate in
/// max_order..1 whose leading coefficient satisfies 1e-10 < |c| < f; if none
/// does, an order-1 fit is returned with `fallback` set.
TrendModel fit_trend(const TimeSeries& series, std::size_t max_order, std::size_t f);

enum class Direction { Rising, Falling };

struct Crossover {
    std::size_t index;
    Direction direction;

    bool operator==(const Crossover&) const = default;
};

/// Sign changes of `difference`. A zero sample takes the sign of the next
/// non-zero sample, so a run of zeros before a change yields one crossover at
/// the first zero. Throws NoCrossovers when the sign never changes.
std::vector<Crossover> find_crossovers(std::span<const double> difference);
std::vector<Crossover> find_crossovers(const TimeSeries& smoothed, const TrendModel& trend);

std::vector<std::size_t> rising_indices(std::span<const Crossover> crossovers);

/// Half-open frame range [begin, end).
struct Period {
    std::size_t begin;
    std::size_t end;

    std::size_t length() const noexcept { return end - begin; }
    bool operator==(const Period&) const = default;
};

struct PeriodSegmentation {
    std::vector<std::size_t> period_starts;
    std::vector<Period> periods;
    double reference_period = 0.0;
    double alpha = 0.8;
};

/// True when | |gap| - l | < (1 - alpha) * l.
bool within_period_window(std::size_t a, std::size_t b, double reference_period, double alpha);

/// Keeps each candidate that has another candidate at a period-like distance,
/// then forms periods from consecutive retained starts whose gap is itself
/// period-like. Throws SeasonalityNotFound if no period survives.
PeriodSegmentation validate_periods(std::span<const std::size_t> candidates,
                                    double reference_period, double alpha);

} // namespace motiontx
