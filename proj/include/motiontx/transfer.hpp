#pragma once

#include "motiontx/decomposition.hpp"
#include "motiontx/seasonality.hpp"
#include "motiontx/series.hpp"
#include "motiontx/table.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace motiontx {

// ---------------------------------------------------------------------------
// Interval grid
// ---------------------------------------------------------------------------

/// Sizes of l_min contiguous intervals splitting a period of `length` frames
/// as evenly as possible; the remainder goes to the earliest intervals.
std::vector<std::size_t> interval_sizes(std::size_t length, std::size_t l_min);

/// 1-based interval of the frame at `offset` within a period of `length`.
std::size_t interval_of_offset(std::size_t offset, std::size_t length, std::size_t l_min);

struct IntervalAssignment {
    std::size_t frame;
    std::size_t interval;  ///< 1..l_min

    bool operator==(const IntervalAssignment&) const = default;
};

/// Correspondence between segmented frames and the l_min intervals of a period.
struct IntervalMap {
    std::size_t l_min = 0;
    std::vector<IntervalAssignment> assignments;  ///< sorted by frame
    std::vector<std::size_t> counts;              ///< counts[j-1] = frames mapped to j

    std::optional<std::size_t> interval_of(std::size_t frame) const;
};

/// Minimum period length over both segmentations.
std::size_t compute_lmin(const PeriodSegmentation& reference, const PeriodSegmentation& target);

IntervalMap build_phi(const PeriodSegmentation& segmentation, std::size_t l_min);

// ---------------------------------------------------------------------------
// Additive factor
// ---------------------------------------------------------------------------

/// Detrended reference values restricted to segmented frames.
struct AdditiveResidual {
    std::vector<std::size_t> frames;
    std::vector<double> values;
};

AdditiveResidual extract_additive(const TimeSeries& values, const TrendModel& trend,
                                  const PeriodSegmentation& segmentation);

/// Per-interval mean of the residual, taken over the frames actually
/// assigned to each interval.
std::vector<double> mean_additive_factor(const AdditiveResidual& residual, const IntervalMap& map);

// ---------------------------------------------------------------------------
// Pattern application
// ---------------------------------------------------------------------------

enum class FrameProvenance {
    Transferred,  ///< inside a segmented target period
    Extended,     ///< outside the segmented region; grid extended periodically
    Original,     ///< untouched input value (fallback or pass-through)
};

struct RefinedSeries {
    std::vector<double> values;   ///< trend + offsets
    std::vector<double> trend;    ///< target trend per frame
    std::vector<double> offsets;  ///< factor value added at each frame
    std::vector<FrameProvenance> provenance;
};

/// y'_i = t_i + a[phi(i)]. Frames outside the target periods use a grid
/// extended with period length max(round(l), l_min) from the nearest
/// preceding period end (or backwards from the first period start).
RefinedSeries apply_transfer(const TrendModel& target_trend, std::span<const double> factor,
                             const IntervalMap& target_map,
                             const PeriodSegmentation& target_segmentation,
                             double reference_period);

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

enum class SmoothKind { Mean, Exponential };

/// Series the polynomial trend is fitted to: the normalised values, or their
/// centered moving average over one period (radius round(l / 2)), which
/// cancels the seasonal component before the fit.
enum class TrendInput { Values, PeriodMean };

/// Two-sided 95% white-noise band for sample autocorrelations, in units of
/// 1 / sqrt(n).
inline constexpr double kAcfWhiteNoiseZ = 1.96;

struct RunConfig {
    double alpha = 0.8;
    std::size_t max_order = 30;
    std::optional<std::size_t> smooth_radius;
    SmoothKind smooth_kind = SmoothKind::Mean;
    double exp_alpha = 0.5;
    TrendInput trend_input = TrendInput::PeriodMean;
    /// Require the detrended autocorrelation at the period lag to leave the
    /// white-noise band before a segmentation is accepted.
    bool acf_gate = true;
    std::optional<std::vector<std::string>> channel_filter;
    /// Worker threads for transfer_table; 0 picks the hardware concurrency.
    std::size_t threads = 0;

    void validate() const;
};

/// Per-sequence intermediate results. Everything after `scale` is computed on
/// the min-max normalised series; `trend` is reported in original units.
struct SequenceAnalysis {
    ScaleParams scale;
    SeasonalityReport seasonality;
    double period = 0.0;  ///< period used for smoothing and validation
    std::size_t smoothing_radius = 0;
    TrendModel trend;
    std::vector<Crossover> crossovers;
    std::optional<double> period_acf;  ///< detrended ACF at lag round(period)
    std::optional<PeriodSegmentation> segmentation;
    std::string failure;  ///< why segmentation is absent
};

/// normalize -> seasonality -> smooth -> trend -> crossovers -> validation.
/// Missing seasonality is reported through `segmentation` being empty;
/// precondition failures (constant or too-short input) throw.
///
/// When `period` is given it replaces the sequence's own n / f for smoothing
/// and period validation, and the trend's coefficient ceiling becomes the
/// number of such periods in the sequence. The transfer pipeline passes the
/// reference period here when analysing the target.
SequenceAnalysis analyze_sequence(const TimeSeries& series, const RunConfig& config,
                                  std::optional<double> period = std::nullopt);

enum class ChannelStatus { Transferred, SkippedNoSeasonality, Passthrough, Seasonal };

std::string_view to_string(ChannelStatus status) noexcept;

struct ChannelDiagnostics {
    std::string name;
    ChannelStatus status = ChannelStatus::Passthrough;
    std::string message;
    std::optional<SequenceAnalysis> reference;
    std::optional<SequenceAnalysis> target;
    std::size_t l_min = 0;
    std::vector<double> mean_factor;  ///< original reference units
};

struct ChannelTransfer {
    RefinedSeries refined;
    ChannelDiagnostics diagnostics;
};

/// Full per-channel transfer. When either sequence has no validated period
/// the target is returned unchanged with status SkippedNoSeasonality.
ChannelTransfer transfer_channel(const TimeSeries& reference, const TimeSeries& target,
                                 const RunConfig& config);

/// Single-sequence diagnostics: the sequence's own periods, l_min and factor.
ChannelDiagnostics analyze_channel(const TimeSeries& series, const RunConfig& config);

struct TableTransfer {
    PoseTable refined;
    std::vector<ChannelDiagnostics> diagnostics;  ///< target channel order
};

TableTransfer transfer_table(const PoseTable& reference, const PoseTable& target,
                             const RunConfig& config);

/// analyze_channel over every selected channel of `table`.
std::vector<ChannelDiagnostics> analyze_table(const PoseTable& table, const RunConfig& config);

} // namespace motiontx
