#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motiontx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point for the `motiontx` tool. `args` excludes the program name.
/// Subcommands: transfer, analyze, synth.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace motiontx
