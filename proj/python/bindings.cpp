#include "motiontx/csv.hpp"
#include "motiontx/decomposition.hpp"
#include "motiontx/error.hpp"
#include "motiontx/report.hpp"
#include "motiontx/seasonality.hpp"
#include "motiontx/series.hpp"
#include "motiontx/synth.hpp"
#include "motiontx/transfer.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace motiontx;

namespace {

TimeSeries series(const std::vector<double>& values) { return TimeSeries(values); }

std::vector<double> to_vector(const TimeSeries& s) { return {s.begin(), s.end()}; }

RunConfig make_config(double alpha, std::size_t max_order, std::optional<std::size_t> smooth_radius,
                      const std::string& smooth_kind, double exp_alpha, const std::string& trend_input,
                      bool acf_gate, std::optional<std::vector<std::string>> channels, std::size_t threads) {
    RunConfig c;
    c.alpha = alpha;
    c.max_order = max_order;
    c.smooth_radius = smooth_radius;
    if (smooth_kind != "mean" && smooth_kind != "exponential") {
        throw Error(ErrorCode::InvalidArgument, "smooth_kind must be 'mean' or 'exponential'");
    }
    c.smooth_kind = smooth_kind == "mean" ? SmoothKind::Mean : SmoothKind::Exponential;
    c.exp_alpha = exp_alpha;
    if (trend_input != "values" && trend_input != "period-mean") {
        throw Error(ErrorCode::InvalidArgument, "trend_input must be 'values' or 'period-mean'");
    }
    c.trend_input = trend_input == "values" ? TrendInput::Values : TrendInput::PeriodMean;
    c.acf_gate = acf_gate;
    c.channel_filter = std::move(channels);
    c.threads = threads;
    c.validate();
    return c;
}

// Table <-> {name: [values]} with insertion order kept.
PoseTable table_from(const py::dict& columns) {
    PoseTable t;
    bool first = true;
    for (auto [key, value] : columns) {
        t.channel_names.push_back(py::cast<std::string>(key));
        t.columns.push_back(py::cast<std::vector<double>>(value));
        if (first) {
            t.frames = t.columns.back().size();
            first = false;
        }
    }
    t.validate();
    return t;
}

py::dict dict_from(const PoseTable& t) {
    py::dict out;
    for (std::size_t c = 0; c < t.channel_count(); ++c) out[py::str(t.channel_names[c])] = t.columns[c];
    return out;
}

py::dict report_dict(std::span<const ChannelDiagnostics> diagnostics, ReportMode mode) {
    const auto json = py::module_::import("json");
    return json.attr("loads")(build_report(diagnostics, mode).dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Seasonality analysis and additive motion-pattern transfer for per-frame series.";

    py::register_exception<Error>(m, "MotiontxError", PyExc_ValueError);

    // series
    m.def("normalize_minmax", [](const std::vector<double>& v) {
        auto [normalized, scale] = normalize_minmax(series(v));
        return py::make_tuple(to_vector(normalized), scale.min, scale.max);
    }, py::arg("values"), "Map onto [0, 1]; returns (normalized, min, max).");
    m.def("mean_smoothing", [](const std::vector<double>& v, std::size_t r) {
        return to_vector(mean_smoothing(series(v), r));
    }, py::arg("values"), py::arg("radius"));
    m.def("exponential_smoothing", [](const std::vector<double>& v, double alpha, std::size_t r) {
        return to_vector(exponential_smoothing(series(v), alpha, r));
    }, py::arg("values"), py::arg("alpha"), py::arg("radius"));

    // seasonality
    m.def("autocorrelation", [](const std::vector<double>& v, std::size_t max_lag) {
        return autocorrelation(series(v), max_lag);
    }, py::arg("values"), py::arg("max_lag"));
    m.def("power_spectrum", [](const std::vector<double>& v) { return power_spectrum(series(v)); },
          py::arg("values"), "Power for bins 0..n/2 of the mean-removed series.");
    m.def("dominant_frequency", [](const std::vector<double>& spectrum) { return dominant_frequency(spectrum); },
          py::arg("spectrum"));
    m.def("reference_period", &reference_period, py::arg("n"), py::arg("f"));

    py::class_<SeasonalityReport>(m, "SeasonalityReport")
        .def_readonly("acf", &SeasonalityReport::acf)
        .def_readonly("spectrum", &SeasonalityReport::spectrum)
        .def_readonly("dominant_frequency", &SeasonalityReport::dominant_frequency)
        .def_readonly("reference_period", &SeasonalityReport::reference_period);
    m.def("analyze_seasonality", [](const std::vector<double>& v, std::optional<std::size_t> max_lag) {
        return analyze_seasonality(series(v), max_lag);
    }, py::arg("values"), py::arg("max_lag") = py::none());

    // decomposition
    py::class_<TrendModel>(m, "TrendModel")
        .def_readonly("coefficients", &TrendModel::coefficients)
        .def_readonly("order", &TrendModel::order)
        .def_readonly("fallback", &TrendModel::fallback)
        .def_readonly("values", &TrendModel::trend_values)
        .def("__call__", &TrendModel::evaluate, py::arg("frame"));
    m.def("fit_trend", [](const std::vector<double>& v, std::size_t max_order, std::size_t f) {
        return fit_trend(series(v), max_order, f);
    }, py::arg("values"), py::arg("max_order"), py::arg("f"));
    m.def("find_crossovers", [](const std::vector<double>& difference) {
        std::vector<std::pair<std::size_t, std::string>> out;
        for (const auto& c : find_crossovers(difference)) {
            out.emplace_back(c.index, c.direction == Direction::Rising ? "rising" : "falling");
        }
        return out;
    }, py::arg("difference"), "Sign changes of smoothed - trend as (index, 'rising'|'falling').");

    py::class_<PeriodSegmentation>(m, "PeriodSegmentation")
        .def_readonly("period_starts", &PeriodSegmentation::period_starts)
        .def_property_readonly("periods", [](const PeriodSegmentation& s) {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const auto& p : s.periods) out.emplace_back(p.begin, p.end);
            return out;
        });
    m.def("validate_periods", [](const std::vector<std::size_t>& candidates, double l, double alpha) {
        return validate_periods(candidates, l, alpha);
    }, py::arg("candidates"), py::arg("l"), py::arg("alpha") = 0.8);

    // pipeline
    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init(&make_config), py::kw_only(), py::arg("alpha") = 0.8, py::arg("max_order") = 30,
             py::arg("smooth_radius") = py::none(), py::arg("smooth_kind") = "mean", py::arg("exp_alpha") = 0.5,
             py::arg("trend_input") = "period-mean", py::arg("acf_gate") = true, py::arg("channels") = py::none(),
             py::arg("threads") = 0)
        .def_readonly("alpha", &RunConfig::alpha)
        .def_readonly("max_order", &RunConfig::max_order)
        .def_readonly("acf_gate", &RunConfig::acf_gate);

    m.def("transfer_channel", [](const std::vector<double>& ref, const std::vector<double>& target,
                                 const RunConfig& config) {
        auto result = transfer_channel(series(ref), series(target), config);
        py::dict out;
        out["values"] = result.refined.values;
        out["trend"] = result.refined.trend;
        out["offsets"] = result.refined.offsets;
        out["status"] = std::string(to_string(result.diagnostics.status));
        out["message"] = result.diagnostics.message;
        out["l_min"] = result.diagnostics.l_min;
        out["mean_factor"] = result.diagnostics.mean_factor;
        return out;
    }, py::arg("reference"), py::arg("target"), py::arg("config") = RunConfig{},
       "Refine `target` with the reference's mean additive factor.");

    m.def("transfer_table", [](const py::dict& ref, const py::dict& target, const RunConfig& config) {
        const auto result = transfer_table(table_from(ref), table_from(target), config);
        return py::make_tuple(dict_from(result.refined), report_dict(result.diagnostics, ReportMode::Transfer));
    }, py::arg("reference"), py::arg("target"), py::arg("config") = RunConfig{},
       "Per-channel transfer over {name: values} tables; returns (refined, report).");
    m.def("analyze_table", [](const py::dict& table, const RunConfig& config) {
        return report_dict(analyze_table(table_from(table), config), ReportMode::Analyze);
    }, py::arg("table"), py::arg("config") = RunConfig{});

    // io
    m.def("read_csv", [](const std::filesystem::path& p) { return dict_from(read_csv(p)); }, py::arg("path"));
    m.def("write_csv", [](const py::dict& table, const std::filesystem::path& p) { write_csv(table_from(table), p); },
          py::arg("table"), py::arg("path"));
    m.def("synth_generate", [](std::size_t n, double period, double trend_slope, double amplitude,
                               double noise_sigma, std::uint64_t seed, const std::string& channel) {
        SynthSpec spec{n, period, trend_slope, amplitude, noise_sigma, seed, channel};
        const auto out = synth_generate(spec);
        return py::make_tuple(dict_from(out.noisy), dict_from(out.truth));
    }, py::kw_only(), py::arg("n") = 200, py::arg("period") = 16.0, py::arg("trend_slope") = 0.0, py::arg("amplitude") = 1.0,
       py::arg("noise_sigma") = 0.0, py::arg("seed") = 0, py::arg("channel") = "theta",
       "Returns (noisy, truth) tables.");

#ifdef MOTIONTX_VERSION
    m.attr("__version__") = MOTIONTX_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
