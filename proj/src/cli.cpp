#include "motiontx/cli.hpp"

#include "motiontx/csv.hpp"
#include "motiontx/error.hpp"
#include "motiontx/report.hpp"
#include "motiontx/synth.hpp"
#include "motiontx/transfer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace motiontx {

namespace {

struct TuningFlags {
    double alpha = 0.8;
    std::size_t max_order = 30;
    std::optional<std::size_t> smooth_radius;
    std::string smooth_kind = "mean";
    double exp_alpha = 0.5;
    std::string trend_input = "period-mean";
    bool no_acf_gate = false;
    std::vector<std::string> channels;
    std::size_t threads = 0;

    void add_to(CLI::App& app) {
        app.add_option("--alpha", alpha, "Period validation confidence in (0,1)")->capture_default_str();
        app.add_option("--max-order", max_order, "Highest polynomial trend order")->capture_default_str();
        app.add_option("--smooth-radius", smooth_radius, "Smoothing radius (default: round(l/8), at least 1)");
        app.add_option("--smooth-kind", smooth_kind, "Smoother used to locate periods")
            ->check(CLI::IsMember({"mean", "exponential"}))
            ->capture_default_str();
        app.add_option("--exp-alpha", exp_alpha, "Center weight of the exponential smoother")->capture_default_str();
        app.add_option("--trend-input", trend_input, "Series the trend polynomial is fitted to")
            ->check(CLI::IsMember({"values", "period-mean"}))
            ->capture_default_str();
        app.add_flag("--no-acf-gate", no_acf_gate, "Accept periods without the autocorrelation check");
        app.add_option("--channels", channels, "Comma-separated channels to process")->delimiter(',');
        app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    }

    RunConfig config(const CLI::App& app) const {
        RunConfig c;
        c.alpha = alpha;
        c.max_order = max_order;
        c.smooth_radius = smooth_radius;
        c.smooth_kind = smooth_kind == "exponential" ? SmoothKind::Exponential : SmoothKind::Mean;
        c.exp_alpha = exp_alpha;
        c.trend_input = trend_input == "values" ? TrendInput::Values : TrendInput::PeriodMean;
        c.acf_gate = !no_acf_gate;
        if (app.count("--channels") > 0) {
            c.channel_filter = channels;
        }
        c.threads = threads;
        return c;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RunConfig checked_config(const TuningFlags& flags, const CLI::App& app) {
    auto config = flags.config(app);
    try {
        config.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (config.smooth_radius && *config.smooth_radius == 0 && config.smooth_kind == SmoothKind::Exponential) {
        throw UsageError("--smooth-radius must be positive for the exponential smoother");
    }
    return config;
}

void report_skips(const std::vector<ChannelDiagnostics>& diagnostics, std::ostream& err) {
    for (const auto& d : diagnostics) {
        if (d.status == ChannelStatus::SkippedNoSeasonality) {
            err << "channel '" << d.name << "': no seasonality, values passed through (" << d.message << ")\n";
        }
    }
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transfer periodic motion patterns between time series", "motiontx"};
    app.require_subcommand(1);

    TuningFlags transfer_flags;
    std::string ref_path, target_path, out_path, report_path;
    auto* transfer = app.add_subcommand("transfer", "Refine a target sequence with a reference's pattern");
    transfer->add_option("--ref", ref_path, "Reference CSV")->required();
    transfer->add_option("--target", target_path, "Target CSV")->required();
    transfer->add_option("--out", out_path, "Refined CSV")->required();
    transfer->add_option("--report", report_path, "JSON diagnostics");
    transfer_flags.add_to(*transfer);

    TuningFlags analyze_flags;
    std::string input_path, analyze_report;
    auto* analyze = app.add_subcommand("analyze", "Seasonality diagnostics for one sequence");
    analyze->add_option("--input", input_path, "Input CSV")->required();
    analyze->add_option("--report", analyze_report, "JSON diagnostics")->required();
    analyze_flags.add_to(*analyze);

    SynthSpec spec;
    std::string synth_out, truth_out;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic trend + sinusoid + noise sequence");
    synth->add_option("--n", spec.n, "Frame count")->required();
    synth->add_option("--period", spec.period, "Seasonal period in frames")->required();
    synth->add_option("--trend-slope", spec.trend_slope, "Linear trend slope per frame")->required();
    synth->add_option("--amplitude", spec.amplitude, "Sinusoid amplitude")->required();
    synth->add_option("--noise-sigma", spec.noise_sigma, "Gaussian noise standard deviation")->required();
    synth->add_option("--seed", spec.seed, "PRNG seed (mt19937_64)")->required();
    synth->add_option("--channel", spec.channel, "Channel name")->capture_default_str();
    synth->add_option("--out", synth_out, "Noisy CSV")->required();
    synth->add_option("--truth-out", truth_out, "Noise-free CSV");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (transfer->parsed()) {
            const auto config = checked_config(transfer_flags, *transfer);
            const auto reference = read_csv(ref_path);
            const auto target = read_csv(target_path);
            const auto result = transfer_table(reference, target, config);
            report_skips(result.diagnostics, err);
            write_csv(result.refined, out_path);
            if (!report_path.empty()) {
                write_report(result.diagnostics, ReportMode::Transfer, report_path);
            }
        } else if (analyze->parsed()) {
            const auto config = checked_config(analyze_flags, *analyze);
            const auto diagnostics = analyze_table(read_csv(input_path), config);
            report_skips(diagnostics, err);
            write_report(diagnostics, ReportMode::Analyze, analyze_report);
        } else if (synth->parsed()) {
            const auto generated = synth_generate(spec);
            write_csv(generated.noisy, synth_out);
            if (!truth_out.empty()) {
                write_csv(generated.truth, truth_out);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

} // namespace motiontx
