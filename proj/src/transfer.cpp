#include "motiontx/transfer.hpp"

#include "motiontx/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <unordered_set>

namespace motiontx {

std::vector<std::size_t> interval_sizes(std::size_t length, std::size_t l_min) {
    if (l_min == 0) {
        throw Error(ErrorCode::InvalidArgument, "l_min must be positive");
    }
    if (length < l_min) {
        throw Error(ErrorCode::PeriodTooShort, "period of " + std::to_string(length) +
                                                   " frames cannot hold " + std::to_string(l_min) +
                                                   " intervals");
    }
    const std::size_t base = length / l_min;
    const std::size_t remainder = length % l_min;
    std::vector<std::size_t> sizes(l_min, base);
    for (std::size_t j = 0; j < remainder; ++j) {
        ++sizes[j];
    }
    return sizes;
}

std::size_t interval_of_offset(std::size_t offset, std::size_t length, std::size_t l_min) {
    const std::size_t base = length / l_min;
    const std::size_t remainder = length % l_min;
    const std::size_t wide_span = remainder * (base + 1);
    if (offset < wide_span) {
        return offset / (base + 1) + 1;
    }
    return remainder + (offset - wide_span) / base + 1;
}

std::optional<std::size_t> IntervalMap::interval_of(std::size_t frame) const {
    const auto it = std::lower_bound(assignments.begin(), assignments.end(), frame,
                                     [](const IntervalAssignment& a, std::size_t f) { return a.frame < f; });
    if (it == assignments.end() || it->frame != frame) {
        return std::nullopt;
    }
    return it->interval;
}

std::size_t compute_lmin(const PeriodSegmentation& reference, const PeriodSegmentation& target) {
    if (reference.periods.empty() || target.periods.empty()) {
        throw Error(ErrorCode::InvalidArgument, "both segmentations need at least one period");
    }
    std::size_t l_min = reference.periods.front().length();
    for (const auto* seg : {&reference, &target}) {
        for (const auto& p : seg->periods) {
            l_min = std::min(l_min, p.length());
        }
    }
    return l_min;
}

IntervalMap build_phi(const PeriodSegmentation& segmentation, std::size_t l_min) {
    IntervalMap map;
    map.l_min = l_min;
    map.counts.assign(l_min, 0);
    for (const auto& period : segmentation.periods) {
        const auto sizes = interval_sizes(period.length(), l_min);
        std::size_t frame = period.begin;
        for (std::size_t j = 0; j < l_min; ++j) {
            for (std::size_t k = 0; k < sizes[j]; ++k) {
                map.assignments.push_back({frame++, j + 1});
            }
            map.counts[j] += sizes[j];
        }
    }
    return map;
}

AdditiveResidual extract_additive(const TimeSeries& values, const TrendModel& trend,
                                  const PeriodSegmentation& segmentation) {
    if (values.size() != trend.trend_values.size()) {
        throw Error(ErrorCode::LengthMismatch, "series has " + std::to_string(values.size()) +
                                                   " frames but trend has " +
                                                   std::to_string(trend.trend_values.size()));
    }
    AdditiveResidual residual;
    for (const auto& period : segmentation.periods) {
        if (period.end > values.size()) {
            throw Error(ErrorCode::LengthMismatch, "period ends at frame " + std::to_string(period.end) +
                                                       " beyond series length " +
                                                       std::to_string(values.size()));
        }
        for (std::size_t i = period.begin; i < period.end; ++i) {
            residual.frames.push_back(i);
            residual.values.push_back(values[i] - trend.trend_values[i]);
        }
    }
    return residual;
}

std::vector<double> mean_additive_factor(const AdditiveResidual& residual, const IntervalMap& map) {
    if (residual.frames.size() != residual.values.size()) {
        throw Error(ErrorCode::LengthMismatch, "residual frames and values differ in length");
    }
    std::vector<double> sums(map.l_min, 0.0);
    std::vector<std::size_t> counts(map.l_min, 0);
    for (std::size_t k = 0; k < residual.frames.size(); ++k) {
        const auto j = map.interval_of(residual.frames[k]);
        if (!j) {
            throw Error(ErrorCode::InvalidArgument,
                        "frame " + std::to_string(residual.frames[k]) + " has no interval assignment");
        }
        sums[*j - 1] += residual.values[k];
        ++counts[*j - 1];
    }
    std::vector<double> factor(map.l_min);
    for (std::size_t j = 0; j < map.l_min; ++j) {
        if (counts[j] == 0) {
            throw Error(ErrorCode::EmptyInterval, "interval " + std::to_string(j + 1) + " received no samples");
        }
        factor[j] = sums[j] / static_cast<double>(counts[j]);
    }
    return factor;
}

RefinedSeries apply_transfer(const TrendModel& target_trend, std::span<const double> factor,
                             const IntervalMap& target_map,
                             const PeriodSegmentation& target_segmentation,
                             double reference_period) {
    if (factor.size() != target_map.l_min || factor.empty()) {
        throw Error(ErrorCode::FactorLengthMismatch, "factor has " + std::to_string(factor.size()) +
                                                         " entries, map expects " +
                                                         std::to_string(target_map.l_min));
    }
    if (target_segmentation.periods.empty()) {
        throw Error(ErrorCode::InvalidArgument, "target segmentation has no periods");
    }
    if (!(reference_period > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "reference period must be positive");
    }
    const auto& trend = target_trend.trend_values;
    const std::size_t n = trend.size();
    const auto& periods = target_segmentation.periods;
    if (periods.back().end > n) {
        throw Error(ErrorCode::LengthMismatch, "target periods extend beyond the trend");
    }

    const std::size_t l_min = target_map.l_min;
    const std::size_t extension =
        std::max(static_cast<std::size_t>(std::llround(reference_period)), l_min);

    RefinedSeries out;
    out.values.resize(n);
    out.trend = trend;
    out.offsets.resize(n);
    out.provenance.resize(n);

    std::size_t next_period = 0;  // first period with end > i
    for (std::size_t i = 0; i < n; ++i) {
        while (next_period < periods.size() && periods[next_period].end <= i) {
            ++next_period;
        }
        std::size_t interval = 0;
        if (const auto j = target_map.interval_of(i)) {
            interval = *j;
            out.provenance[i] = FrameProvenance::Transferred;
        } else {
            std::size_t offset = 0;
            if (next_period == 0) {
                const std::size_t before = (periods.front().begin - i) % extension;
                offset = before == 0 ? 0 : extension - before;
            } else {
                offset = (i - periods[next_period - 1].end) % extension;
            }
            interval = interval_of_offset(offset, extension, l_min);
            out.provenance[i] = FrameProvenance::Extended;
        }
        out.offsets[i] = factor[interval - 1];
        out.values[i] = trend[i] + out.offsets[i];
    }
    return out;
}

void RunConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "alpha must lie in (0, 1)");
    }
    if (max_order < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_order must be at least 1");
    }
    if (!(exp_alpha > 0.0 && exp_alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidAlpha, "exp_alpha must lie in (0, 1]");
    }
}

namespace {

constexpr std::size_t kMinimumChannelLength = 8;

// Centered moving average spanning exactly one period: w = round(l) samples,
// or the 2 x w average (half weight on both ends) when w is even, so a
// component of period w cancels. Windows near the ends are shifted inward
// rather than clipped; a clipped window would leak the seasonal component
// into the trend there.
std::vector<double> period_mean(const TimeSeries& series, double period) {
    const std::size_t n = series.size();
    const auto w = static_cast<std::size_t>(std::max(1LL, std::llround(period)));
    const bool even = w % 2 == 0;
    const std::size_t span = even ? w + 1 : w;
    std::vector<double> out(n);
    if (span > n) {
        double sum = 0.0;
        for (double v : series) sum += v;
        std::fill(out.begin(), out.end(), sum / static_cast<double>(n));
        return out;
    }
    const std::size_t half = span / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t first = std::min(i > half ? i - half : 0, n - span);
        double sum = 0.0;
        for (std::size_t k = 0; k < span; ++k) {
            const double weight = even && (k == 0 || k == span - 1) ? 0.5 : 1.0;
            sum += weight * series[first + k];
        }
        out[i] = sum / static_cast<double>(w);
    }
    return out;
}

TrendModel to_original_units(TrendModel model, const ScaleParams& scale) {
    const double range = scale.max - scale.min;
    for (auto& c : model.coefficients) {
        c *= range;
    }
    model.coefficients.front() += scale.min;
    for (auto& v : model.trend_values) {
        v = scale.min + range * v;
    }
    return model;
}

// Rejects a segmentation when the detrended series is indistinguishable from
// white noise at the period lag (95% band, 1.96 / sqrt(n)).
void apply_acf_gate(const TimeSeries& normalized, const TrendModel& trend, SequenceAnalysis& out) {
    const std::size_t n = normalized.size();
    const auto lag = static_cast<std::size_t>(std::llround(out.period));
    const double band = kAcfWhiteNoiseZ / std::sqrt(static_cast<double>(n));
    std::vector<double> detrended(n);
    for (std::size_t i = 0; i < n; ++i) {
        detrended[i] = normalized[i] - trend.trend_values[i];
    }
    const auto [lo, hi] = std::minmax_element(detrended.begin(), detrended.end());
    if (lag >= 1 && lag < n && *hi - *lo >= kConstantRangeTolerance) {
        out.period_acf = autocorrelation(TimeSeries(std::move(detrended)), lag)[lag];
    }
    if (!out.period_acf || *out.period_acf <= band) {
        out.segmentation.reset();
        out.failure = "autocorrelation of the detrended series at lag " + std::to_string(lag) +
                      " is inside the white-noise band " + std::to_string(band);
    }
}

RefinedSeries unchanged(const TimeSeries& target, const std::vector<double>& trend) {
    RefinedSeries out;
    out.values.assign(target.begin(), target.end());
    out.trend = trend;
    out.offsets.assign(target.size(), 0.0);
    out.provenance.assign(target.size(), FrameProvenance::Original);
    return out;
}

bool is_data_precondition(ErrorCode code) {
    return code == ErrorCode::ConstantSeries || code == ErrorCode::SeriesTooShort ||
           code == ErrorCode::InvalidSeries;
}

std::vector<bool> selected_channels(const PoseTable& table, const RunConfig& config) {
    std::vector<bool> selected(table.channel_count(), !config.channel_filter.has_value());
    if (config.channel_filter) {
        for (const auto& name : *config.channel_filter) {
            const auto c = table.find(name);
            if (c == table.channel_count()) {
                throw Error(ErrorCode::ChannelMismatch, "channel filter names unknown channel '" + name + "'");
            }
            selected[c] = true;
        }
    }
    return selected;
}

// Runs job(c) for every channel index, possibly concurrently. Each job writes
// only its own slot; the first failure by channel order is rethrown.
template <typename Job>
void for_each_channel(std::size_t count, std::size_t threads, Job&& job) {
    std::vector<std::exception_ptr> failures(count);
    std::size_t workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t c = 0; c < count; ++c) {
            try {
                job(c);
            } catch (...) {
                failures[c] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < count; c = next++) {
                    try {
                        job(c);
                    } catch (...) {
                        failures[c] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
}

ChannelDiagnostics passthrough(const std::string& name, std::string message) {
    ChannelDiagnostics d;
    d.name = name;
    d.status = ChannelStatus::Passthrough;
    d.message = std::move(message);
    return d;
}

} // namespace

std::string_view to_string(ChannelStatus status) noexcept {
    switch (status) {
    case ChannelStatus::Transferred: return "transferred";
    case ChannelStatus::SkippedNoSeasonality: return "skipped_no_seasonality";
    case ChannelStatus::Passthrough: return "passthrough";
    case ChannelStatus::Seasonal: return "seasonal";
    }
    return "unknown";
}

SequenceAnalysis analyze_sequence(const TimeSeries& series, const RunConfig& config,
                                  std::optional<double> period) {
    config.validate();
    if (series.size() < kMinimumChannelLength) {
        throw Error(ErrorCode::SeriesTooShort, "sequence has " + std::to_string(series.size()) +
                                                   " frames, need at least " +
                                                   std::to_string(kMinimumChannelLength));
    }
    if (period && !(*period > 0.0 && std::isfinite(*period))) {
        throw Error(ErrorCode::InvalidArgument, "period override must be positive");
    }

    SequenceAnalysis out;
    const auto [normalized, scale] = normalize_minmax(series);
    out.scale = scale;
    out.seasonality = analyze_seasonality(normalized);
    out.period = period.value_or(out.seasonality.reference_period);

    std::size_t cycles = out.seasonality.dominant_frequency;
    if (period) {
        cycles = static_cast<std::size_t>(
            std::max(1.0, std::round(static_cast<double>(series.size()) / *period)));
    }

    out.smoothing_radius = config.smooth_radius.value_or(default_smoothing_radius(out.period));
    const TimeSeries smoothed = config.smooth_kind == SmoothKind::Mean
                                    ? mean_smoothing(normalized, out.smoothing_radius)
                                    : exponential_smoothing(normalized, config.exp_alpha, out.smoothing_radius);

    const std::size_t order = std::min(config.max_order, series.size() - 1);
    TimeSeries trend_input = normalized;
    if (config.trend_input == TrendInput::PeriodMean) {
        trend_input = TimeSeries(period_mean(normalized, out.period));
    }
    const TrendModel trend = fit_trend(trend_input, order, cycles);
    out.trend = to_original_units(trend, scale);

    try {
        out.crossovers = find_crossovers(smoothed, trend);
        const auto starts = rising_indices(out.crossovers);
        out.segmentation = validate_periods(starts, out.period, config.alpha);
        if (config.acf_gate) {
            apply_acf_gate(normalized, trend, out);
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoCrossovers && e.code() != ErrorCode::SeasonalityNotFound) {
            throw;
        }
        out.failure = e.what();
    }
    return out;
}

ChannelTransfer transfer_channel(const TimeSeries& reference, const TimeSeries& target,
                                 const RunConfig& config) {
    ChannelTransfer out;
    auto& diag = out.diagnostics;
    diag.reference = analyze_sequence(reference, config);
    diag.target = analyze_sequence(target, config, diag.reference->period);

    if (!diag.reference->segmentation || !diag.target->segmentation) {
        diag.status = ChannelStatus::SkippedNoSeasonality;
        diag.message = !diag.reference->segmentation ? "reference: " + diag.reference->failure
                                                     : "target: " + diag.target->failure;
        out.refined = unchanged(target, diag.target->trend.trend_values);
        return out;
    }

    const auto& ref_seg = *diag.reference->segmentation;
    const auto& tgt_seg = *diag.target->segmentation;
    diag.l_min = compute_lmin(ref_seg, tgt_seg);
    const auto ref_map = build_phi(ref_seg, diag.l_min);
    const auto tgt_map = build_phi(tgt_seg, diag.l_min);

    const auto residual = extract_additive(reference, diag.reference->trend, ref_seg);
    diag.mean_factor = mean_additive_factor(residual, ref_map);
    out.refined = apply_transfer(diag.target->trend, diag.mean_factor, tgt_map, tgt_seg,
                                 diag.target->period);
    diag.status = ChannelStatus::Transferred;
    return out;
}

ChannelDiagnostics analyze_channel(const TimeSeries& series, const RunConfig& config) {
    ChannelDiagnostics diag;
    diag.target = analyze_sequence(series, config);
    if (!diag.target->segmentation) {
        diag.status = ChannelStatus::SkippedNoSeasonality;
        diag.message = diag.target->failure;
        return diag;
    }
    const auto& seg = *diag.target->segmentation;
    diag.l_min = compute_lmin(seg, seg);
    const auto map = build_phi(seg, diag.l_min);
    diag.mean_factor = mean_additive_factor(extract_additive(series, diag.target->trend, seg), map);
    diag.status = ChannelStatus::Seasonal;
    return diag;
}

TableTransfer transfer_table(const PoseTable& reference, const PoseTable& target, const RunConfig& config) {
    config.validate();
    reference.validate();
    target.validate();
    {
        const std::unordered_set<std::string> ref_names(reference.channel_names.begin(),
                                                        reference.channel_names.end());
        const std::unordered_set<std::string> tgt_names(target.channel_names.begin(),
                                                        target.channel_names.end());
        if (ref_names != tgt_names) {
            throw Error(ErrorCode::ChannelMismatch, "reference and target channel sets differ");
        }
    }
    const auto selected = selected_channels(target, config);

    TableTransfer out;
    out.refined = target;
    out.diagnostics.resize(target.channel_count());

    for_each_channel(target.channel_count(), config.threads, [&](std::size_t c) {
        const auto& name = target.channel_names[c];
        if (!selected[c]) {
            out.diagnostics[c] = passthrough(name, "not selected by channel filter");
            return;
        }
        const auto& ref_column = reference.columns[reference.find(name)];
        try {
            auto result = transfer_channel(TimeSeries(ref_column), TimeSeries(target.columns[c]), config);
            result.diagnostics.name = name;
            if (result.diagnostics.status == ChannelStatus::Transferred) {
                out.refined.columns[c] = std::move(result.refined.values);
            }
            out.diagnostics[c] = std::move(result.diagnostics);
        } catch (const Error& e) {
            if (!is_data_precondition(e.code())) {
                throw Error(e.code(), "channel '" + name + "': " + e.what());
            }
            ChannelDiagnostics d;
            d.name = name;
            d.status = ChannelStatus::SkippedNoSeasonality;
            d.message = e.what();
            out.diagnostics[c] = std::move(d);
        }
    });
    return out;
}

std::vector<ChannelDiagnostics> analyze_table(const PoseTable& table, const RunConfig& config) {
    config.validate();
    table.validate();
    const auto selected = selected_channels(table, config);
    std::vector<ChannelDiagnostics> out(table.channel_count());
    for_each_channel(table.channel_count(), config.threads, [&](std::size_t c) {
        const auto& name = table.channel_names[c];
        if (!selected[c]) {
            out[c] = passthrough(name, "not selected by channel filter");
            return;
        }
        try {
            out[c] = analyze_channel(TimeSeries(table.columns[c]), config);
            out[c].name = name;
        } catch (const Error& e) {
            if (!is_data_precondition(e.code())) {
                throw Error(e.code(), "channel '" + name + "': " + e.what());
            }
            out[c].name = name;
            out[c].status = ChannelStatus::SkippedNoSeasonality;
            out[c].message = e.what();
        }
    });
    return out;
}

} // namespace motiontx
