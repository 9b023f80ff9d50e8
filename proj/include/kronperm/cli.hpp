#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kronperm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kAssertionFailure = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::string alpha_spec = "named:phi";
  std::uint64_t n = 0;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::optional<Format> format;
  std::string out_file;
  std::size_t precision_budget = 10000;
  std::uint64_t size_limit = 1000000;

  // cf / identities
  std::size_t depth = 10;
  // verify
  std::string suite;
  unsigned max_index = 25;
  std::size_t periods = 3;
  std::uint64_t max_q = 100000;
  unsigned max_d = 50;
  std::vector<std::uint64_t> r_values;
  unsigned max_m = 40;
  // ensemble
  std::uint64_t seed = 1;
  std::size_t samples = 10;
  std::size_t cf_depth = 64;
  std::uint64_t max_points = 100000;
};

/// Parses argv and runs one command. Output goes to `out` (or --out FILE),
/// diagnostics to `err`. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace kronperm::cli
