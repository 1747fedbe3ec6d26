#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline double mean(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

/// Biased ACF straight from the definition.
inline std::vector<double> acf(const std::vector<double>& x, std::size_t max_lag) {
    const double m = mean(x);
    double c0 = 0.0;
    for (double v : x) c0 += (v - m) * (v - m);
    std::vector<double> out;
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double ck = 0.0;
        for (std::size_t t = 0; t + k < x.size(); ++t) ck += (x[t] - m) * (x[t + k] - m);
        out.push_back(ck / c0);
    }
    return out;
}

/// |DFT(x - mean)|^2 / n over all n bins using std::polar twiddles.
inline std::vector<double> dft_power(const std::vector<double>& x) {
    const std::size_t n = x.size();
    const double m = mean(x);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) * static_cast<double>(t) /
                                 static_cast<double>(n);
            acc += (x[t] - m) * std::polar(1.0, angle);
        }
        out[k] = std::norm(acc) / static_cast<double>(n);
    }
    return out;
}

/// Plain monomial evaluation, coefficients lowest order first.
inline double poly(const std::vector<double>& c, double t) {
    double value = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) value += c[k] * std::pow(t, static_cast<double>(k));
    return value;
}

/// Clipped-window mean at every index.
inline std::vector<double> window_mean(const std::vector<double>& x, std::size_t r) {
    const long n = static_cast<long>(x.size());
    std::vector<double> out;
    for (long i = 0; i < n; ++i) {
        double s = 0.0;
        long count = 0;
        for (long j = i - static_cast<long>(r); j <= i + static_cast<long>(r); ++j) {
            if (j >= 0 && j < n) {
                s += x[static_cast<std::size_t>(j)];
                ++count;
            }
        }
        out.push_back(s / static_cast<double>(count));
    }
    return out;
}

/// Exhaustive neighbour test: retained starts and consecutive periods.
struct ValidationResult {
    std::vector<std::size_t> retained;
    std::vector<std::pair<std::size_t, std::size_t>> periods;
};

inline ValidationResult validated_periods(const std::vector<std::size_t>& candidates, double l, double alpha) {
    auto ok = [&](std::size_t a, std::size_t b) {
        const double gap = std::fabs(static_cast<double>(a) - static_cast<double>(b));
        return std::fabs(gap - l) < (1.0 - alpha) * l;
    };
    ValidationResult r;
    for (std::size_t p : candidates) {
        bool any = false;
        for (std::size_t q : candidates) {
            if (q != p && ok(p, q)) any = true;
        }
        if (any) r.retained.push_back(p);
    }
    for (std::size_t k = 1; k < r.retained.size(); ++k) {
        if (ok(r.retained[k - 1], r.retained[k])) r.periods.emplace_back(r.retained[k - 1], r.retained[k]);
    }
    return r;
}

/// Group-by mean keyed on interval index.
inline std::map<std::size_t, double> group_mean(const std::vector<std::size_t>& keys,
                                                const std::vector<double>& values) {
    std::map<std::size_t, double> sum;
    std::map<std::size_t, double> count;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        sum[keys[i]] += values[i];
        count[keys[i]] += 1.0;
    }
    for (auto& [k, v] : sum) v /= count[k];
    return sum;
}

inline double rmse(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s / static_cast<double>(a.size()));
}

inline std::vector<double> sinusoid(std::size_t n, double period, double amplitude = 1.0, double offset = 0.0,
                                    double slope = 0.0) {
    std::vector<double> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double ft = static_cast<double>(t);
        out[t] = offset + slope * ft + amplitude * std::sin(2.0 * std::numbers::pi * ft / period);
    }
    return out;
}

inline std::vector<double> uniform_series(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(n);
    for (auto& v : out) v = dist(rng);
    return out;
}

} // namespace oracle
