#include "motiontx/decomposition.hpp"

#include "motiontx/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace motiontx {

namespace {

struct PolynomialFit {
    std::vector<double> coefficients;
};

// Least squares in the monomial basis of u. Columns are scaled to unit norm
// before the QR solve and the scaling is undone afterwards.
PolynomialFit solve_least_squares(const std::vector<double>& u, std::span<const double> y,
                                  std::size_t order) {
    const auto rows = static_cast<Eigen::Index>(u.size());
    const auto cols = static_cast<Eigen::Index>(order + 1);
    Eigen::MatrixXd design(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        double power = 1.0;
        for (Eigen::Index k = 0; k < cols; ++k) {
            design(i, k) = power;
            power *= u[static_cast<std::size_t>(i)];
        }
    }
    Eigen::VectorXd scale = design.colwise().norm().transpose();
    for (Eigen::Index k = 0; k < cols; ++k) {
        if (scale(k) == 0.0) {
            scale(k) = 1.0;
        }
        design.col(k) /= scale(k);
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(y.data(), rows);
    const Eigen::VectorXd solution = design.householderQr().solve(rhs);

    PolynomialFit fit;
    fit.coefficients.resize(order + 1);
    for (Eigen::Index k = 0; k < cols; ++k) {
        fit.coefficients[static_cast<std::size_t>(k)] = solution(k) / scale(k);
    }
    return fit;
}

double horner(const std::vector<double>& coefficients, double u) {
    double value = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        value = value * u + *it;
    }
    return value;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

} // namespace

double TrendModel::evaluate(double frame) const {
    return horner(coefficients, (frame - center) / half_span);
}

TrendModel fit_trend(const TimeSeries& series, std::size_t max_order, std::size_t f) {
    const std::size_t n = series.size();
    if (max_order < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_order must be at least 1");
    }
    if (f < 1) {
        throw Error(ErrorCode::InvalidArgument, "frequency must be at least 1");
    }
    if (n <= max_order) {
        throw Error(ErrorCode::SeriesTooShort, "fit of order " + std::to_string(max_order) +
                                                   " needs more than " + std::to_string(n) + " samples");
    }

    TrendModel model;
    model.center = static_cast<double>(n - 1) / 2.0;
    model.half_span = model.center;
    std::vector<double> u(n);
    for (std::size_t t = 0; t < n; ++t) {
        u[t] = (static_cast<double>(t) - model.center) / model.half_span;
    }

    const double ceiling = static_cast<double>(f);
    bool selected = false;
    for (std::size_t order = max_order; order >= 1; --order) {
        auto fit = solve_least_squares(u, series.values(), order);
        const double leading = std::abs(fit.coefficients.back());
        if (leading > kLeadingCoefficientFloor && leading < ceiling) {
            model.coefficients = std::move(fit.coefficients);
            model.order = order;
            selected = true;
            break;
        }
    }
    if (!selected) {
        model.coefficients = solve_least_squares(u, series.values(), 1).coefficients;
        model.order = 1;
        model.fallback = true;
    }

    model.trend_values.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        model.trend_values[t] = horner(model.coefficients, u[t]);
    }
    return model;
}

std::vector<Crossover> find_crossovers(std::span<const double> difference) {
    const std::size_t n = difference.size();
    // Effective signs: zeros inherit the next non-zero sign; trailing zeros
    // inherit the previous one.
    std::vector<int> sign(n, 0);
    int next = 0;
    for (std::size_t i = n; i-- > 0;) {
        const int s = sign_of(difference[i]);
        if (s != 0) {
            next = s;
        }
        sign[i] = next;
    }
    int previous = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sign[i] == 0) {
            sign[i] = previous;
        }
        previous = sign[i];
    }

    std::vector<Crossover> out;
    for (std::size_t i = 1; i < n; ++i) {
        if (sign[i - 1] != 0 && sign[i] != sign[i - 1]) {
            // Anchor at whichever bracketing sample lies closer to the trend;
            // ties and collisions with the previous crossover go to i.
            std::size_t index = i;
            if (std::abs(difference[i - 1]) < std::abs(difference[i]) &&
                (out.empty() || out.back().index < i - 1)) {
                index = i - 1;
            }
            out.push_back({index, sign[i] > 0 ? Direction::Rising : Direction::Falling});
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::NoCrossovers, "difference never changes sign");
    }
    return out;
}

std::vector<Crossover> find_crossovers(const TimeSeries& smoothed, const TrendModel& trend) {
    if (smoothed.size() != trend.trend_values.size()) {
        throw Error(ErrorCode::LengthMismatch, "smoothed series and trend differ in length");
    }
    std::vector<double> difference(smoothed.size());
    for (std::size_t i = 0; i < smoothed.size(); ++i) {
        difference[i] = smoothed[i] - trend.trend_values[i];
    }
    return find_crossovers(difference);
}

std::vector<std::size_t> rising_indices(std::span<const Crossover> crossovers) {
    std::vector<std::size_t> out;
    for (const auto& c : crossovers) {
        if (c.direction == Direction::Rising) {
            out.push_back(c.index);
        }
    }
    return out;
}

bool within_period_window(std::size_t a, std::size_t b, double reference_period, double alpha) {
    const double gap = a > b ? static_cast<double>(a - b) : static_cast<double>(b - a);
    return std::abs(gap - reference_period) < (1.0 - alpha) * reference_period;
}

PeriodSegmentation validate_periods(std::span<const std::size_t> candidates,
                                    double reference_period, double alpha) {
    if (!(reference_period > 0.0) || !std::isfinite(reference_period)) {
        throw Error(ErrorCode::InvalidArgument, "reference period must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "confidence alpha must lie in (0, 1)");
    }
    if (!std::is_sorted(candidates.begin(), candidates.end()) ||
        std::adjacent_find(candidates.begin(), candidates.end()) != candidates.end()) {
        throw Error(ErrorCode::InvalidArgument, "candidates must be strictly increasing");
    }

    PeriodSegmentation seg;
    seg.reference_period = reference_period;
    seg.alpha = alpha;
    const double upper = reference_period * (2.0 - alpha);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool has_neighbor = false;
        // Only candidates closer than (2 - alpha) * l can satisfy the window.
        for (std::size_t j = i; j-- > 0 && static_cast<double>(candidates[i] - candidates[j]) < upper;) {
            if (within_period_window(candidates[i], candidates[j], reference_period, alpha)) {
                has_neighbor = true;
                break;
            }
        }
        for (std::size_t j = i + 1;
             !has_neighbor && j < candidates.size() &&
             static_cast<double>(candidates[j] - candidates[i]) < upper;
             ++j) {
            has_neighbor = within_period_window(candidates[i], candidates[j], reference_period, alpha);
        }
        if (has_neighbor) {
            seg.period_starts.push_back(candidates[i]);
        }
    }

    for (std::size_t k = 0; k + 1 < seg.period_starts.size(); ++k) {
        const auto begin = seg.period_starts[k];
        const auto end = seg.period_starts[k + 1];
        if (within_period_window(begin, end, reference_period, alpha)) {
            seg.periods.push_back({begin, end});
        }
    }

    if (seg.period_starts.size() < 2 || seg.periods.empty()) {
        throw Error(ErrorCode::SeasonalityNotFound,
                    std::to_string(seg.period_starts.size()) + " of " +
                        std::to_string(candidates.size()) + " period starts survived validation");
    }
    return seg;
}

} // namespace motiontx
