#include "motiontx/report.hpp"

#include "motiontx/csv.hpp"

namespace motiontx {

namespace {

using json = nlohmann::ordered_json;

void put_sequence(json& entry, const std::optional<SequenceAnalysis>& analysis) {
    if (!analysis) {
        for (const char* key : {"dominant_frequency", "reference_period", "acf", "spectrum", "trend_order",
                                "period_starts"}) {
            entry[key] = nullptr;
        }
        return;
    }
    entry["dominant_frequency"] = analysis->seasonality.dominant_frequency;
    entry["reference_period"] = analysis->seasonality.reference_period;
    entry["acf"] = analysis->seasonality.acf;
    entry["spectrum"] = analysis->seasonality.spectrum;
    entry["trend_order"] = analysis->trend.order;
    if (analysis->segmentation) {
        entry["period_starts"] = analysis->segmentation->period_starts;
    } else {
        entry["period_starts"] = nullptr;
    }
}

} // namespace

nlohmann::ordered_json build_report(std::span<const ChannelDiagnostics> diagnostics, ReportMode mode) {
    json report;
    report["schema_version"] = kReportSchemaVersion;
    report["mode"] = mode == ReportMode::Transfer ? "transfer" : "analyze";
    json channels = json::array();
    for (const auto& d : diagnostics) {
        json entry;
        entry["name"] = d.name;
        entry["status"] = std::string(to_string(d.status));
        entry["message"] = d.message;
        put_sequence(entry, d.target);
        if (d.l_min > 0) {
            entry["l_min"] = d.l_min;
            entry["mean_factor"] = d.mean_factor;
        } else {
            entry["l_min"] = nullptr;
            entry["mean_factor"] = nullptr;
        }
        if (mode == ReportMode::Transfer && d.reference) {
            json reference;
            put_sequence(reference, d.reference);
            entry["reference"] = std::move(reference);
        } else {
            entry["reference"] = nullptr;
        }
        channels.push_back(std::move(entry));
    }
    report["channels"] = std::move(channels);
    return report;
}

void write_report(std::span<const ChannelDiagnostics> diagnostics, ReportMode mode,
                  const std::filesystem::path& path) {
    write_file_atomic(path, build_report(diagnostics, mode).dump(2) + "\n");
}

} // namespace motiontx
