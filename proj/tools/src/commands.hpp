#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cartroute::cli {

// Process exit codes. Scripts driving `bench` rely on these staying fixed.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,           // bad flags, unreadable or invalid config
  kParse = 2,           // malformed OSM / graph / grid / JSON, or an empty graph
  kCoverage = 3,        // elevation source misses graph nodes
  kUnreachable = 4,     // some stop cannot be reached
  kAllRunsFailed = 5,   // bench: no seed x policy cell succeeded
  kNegativeCycle = 6,   // inconsistent grades produced a negative cycle
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartroute::cli
