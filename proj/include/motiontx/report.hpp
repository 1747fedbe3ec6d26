#pragma once

#include "motiontx/transfer.hpp"

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

namespace motiontx {

enum class ReportMode { Transfer, Analyze };

/// JSON diagnostics, one entry per channel in input order. Every entry carries
/// the keys name, status, message, dominant_frequency, reference_period, acf,
/// spectrum, trend_order, period_starts, l_min, mean_factor and reference;
/// values that do not apply are null.
nlohmann::ordered_json build_report(std::span<const ChannelDiagnostics> diagnostics, ReportMode mode);

void write_report(std::span<const ChannelDiagnostics> diagnostics, ReportMode mode,
                  const std::filesystem::path& path);

inline constexpr int kReportSchemaVersion = 1;

} // namespace motiontx
