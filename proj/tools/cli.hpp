#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace turaev::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line tool. Reports go to `out`, diagnostics to `err`.
/// With --json, `out` receives exactly one JSON object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used as the input digest in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace turaev::cli
