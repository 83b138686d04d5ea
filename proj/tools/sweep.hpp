#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "detcount/types.hpp"

namespace detcount::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class Mode { count, sweep, tau, hyperbola, lemmas, casework, fit, fixtures };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

struct SweepConfig {
  Mode mode = Mode::count;
  std::vector<Int> H;
  std::vector<Int> delta;
  std::vector<Int> N;
  int k = 2;
  double epsilon = 0.1;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t queries = 500;
  std::string output;
  std::string input;  // sweep CSV for `fit`
  std::string format = "csv";
  bool timing = true;
  bool fit = false;
};

nlohmann::json to_json(const SweepConfig& config);

/// Fills `config` from a JSON object with the keys written by to_json.
/// Unknown keys are rejected.
void apply_json(const nlohmann::json& j, SweepConfig& config);

/// Throws ArgumentError with an explicit message if the config cannot run.
void validate(const SweepConfig& config);

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kInvariant = 3 };

/// Runs one command, writing the artifact (CSV or JSON) to `out` and
/// diagnostics to `err`. Never throws; library errors become exit codes.
int run(const SweepConfig& config, std::ostream& out, std::ostream& err);

}  // namespace detcount::cli
