#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "optlearn/config.hpp"

namespace optlearn::cli {

struct RunOptions {
  std::optional<std::uint64_t> seed;    // overrides config
  std::optional<std::string> out_dir;   // overrides config
  int threads = 1;                      // must not change any output byte
  bool quiet = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Dispatches solve | simulate | verify | doubling | all; writes value.csv,
// policy.csv, residual.csv, episodes.csv (optional) and summary.json under
// the output directory. Returns the process exit code.
int run(const std::string& command, RunConfig config, const RunOptions& options);

}  // namespace optlearn::cli
