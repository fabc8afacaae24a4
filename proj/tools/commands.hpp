#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "run_config.hpp"

namespace wavepack::cli {

enum ExitCode { kOk = 0, kUsage = 2, kFlagged = 3 };

// Bad flag values or combinations.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output would contain flagged values and --allow-flagged was not given.
class FlaggedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs one subcommand, writing data to out and diagnostics to err.
// Library errors are mapped to exit codes here.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Number formatting shared by every CSV writer: 17 significant digits.
std::string format_number(double v);

// Text printed by --describe for a figure id, or for all ids when empty.
std::string describe_figure(const std::string& id);

// Worker cap from WAVEPACK_THREADS, defaulting to the hardware count.
unsigned thread_cap();

}  // namespace wavepack::cli
