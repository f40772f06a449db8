#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hfs::cli {

inline constexpr int kReportVersion = 1;

/// Runs one command. args excludes the program name.
/// Returns 0 on success, 1 on a domain or validation error, 2 on bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfs::cli
