"""Seasonality analysis and additive motion-pattern transfer."""

from ._core import (
    MotiontxError,
    PeriodSegmentation,
    RunConfig,
    SeasonalityReport,
    TrendModel,
    __version__,
    analyze_seasonality,
    analyze_table,
    autocorrelation,
    dominant_frequency,
    exponential_smoothing,
    find_crossovers,
    fit_trend,
    mean_smoothing,
    normalize_minmax,
    power_spectrum,
    read_csv,
    reference_period,
    synth_generate,
    transfer_channel,
    transfer_table,
    validate_periods,
    write_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
