#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosegas::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNumericFailure = 1,  // capacity, overflow, numeric or search failure
  kUsageError = 2,
};

/// Entry point behind the `bosegas` executable. Subcommands: curve, critical,
/// compare, physical, partitions. CSV goes to `out` unless --output is given;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same as above; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Twelve significant digits, shortest form ("%.12g").
std::string format_number(double value);

}  // namespace bosegas::cli
