#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agmloop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Reports go to `out` unless --output is
/// given; diagnostics go to `err`. Returns 0 when all checks pass, 1 when a check fails, and
/// 2 for usage, parse and domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "start:stop:step" into the points start, start+step, ... not exceeding stop.
/// Throws DomainError for malformed or non-positive specs and for more than kMaxGridPoints.
std::vector<double> parse_grid(const std::string& spec);

inline constexpr std::size_t kMaxGridPoints = 25;

}  // namespace agmloop::cli
