#pragma once

#include "motiontx/table.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace motiontx {

/// Header `frame,<name1>,<name2>,...`; each row is a 0-based consecutive
/// frame index followed by one decimal value per channel.
PoseTable read_csv(const std::filesystem::path& path);
PoseTable parse_csv(std::istream& in, const std::string& source = "<stream>");

/// Values are rendered with 9 significant digits. The file is written to a
/// temporary sibling and renamed into place.
void write_csv(const PoseTable& table, const std::filesystem::path& path);
void format_csv(const PoseTable& table, std::ostream& out);

/// Writes `contents` to `path` via a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace motiontx
