// detcount: exact counts of 2x2 integer matrices with bounded entries and a
// given determinant, plus the divisor-sum and lattice-point diagnostics
// around them.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sweep.hpp"

using detcount::cli::Mode;
using detcount::cli::SweepConfig;

namespace {

struct Binding {
  CLI::Option* option;
  std::function<void(const SweepConfig&)> take_default;  // copy field from config file
};

std::vector<Binding> add_flags(CLI::App& sub, SweepConfig& cfg, std::string& config_path) {
  std::vector<Binding> b;
  auto bind = [&](CLI::Option* opt, auto member) {
    b.push_back({opt, [&cfg, member](const SweepConfig& base) { cfg.*member = base.*member; }});
  };
  bind(sub.add_option("--H", cfg.H, "Heights, comma separated")->delimiter(','), &SweepConfig::H);
  bind(sub.add_option("--delta", cfg.delta, "Determinants, comma separated")->delimiter(','), &SweepConfig::delta);
  bind(sub.add_option("--N", cfg.N, "Table sizes, comma separated")->delimiter(','), &SweepConfig::N);
  bind(sub.add_option("--k", cfg.k, "Moment order"), &SweepConfig::k);
  bind(sub.add_option("--epsilon", cfg.epsilon, "Exponent slack in nominal bounds"), &SweepConfig::epsilon);
  bind(sub.add_option("--jobs", cfg.jobs, "Worker threads"), &SweepConfig::jobs);
  bind(sub.add_option("--seed", cfg.seed, "Seed for randomized query sets"), &SweepConfig::seed);
  bind(sub.add_option("--queries", cfg.queries, "Queries per hyperbola variant"), &SweepConfig::queries);
  bind(sub.add_option("--output", cfg.output, "Write the artifact here instead of stdout"), &SweepConfig::output);
  bind(sub.add_option("--input", cfg.input, "Sweep CSV to fit"), &SweepConfig::input);
  bind(sub.add_option("--format", cfg.format, "csv or json"), &SweepConfig::format);
  bind(sub.add_flag("--fit", cfg.fit, "Append fitted exponents / coefficients"), &SweepConfig::fit);
  auto* no_timing = sub.add_flag_function(
      "--no-timing", [&cfg](std::int64_t) { cfg.timing = false; }, "Drop the wall_time_ms column");
  b.push_back({no_timing, [&cfg](const SweepConfig& base) { cfg.timing = base.timing; }});
  sub.add_option("--config", config_path, "JSON config file; flags override it")->check(CLI::ExistingFile);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact determinant counts and divisor-sum diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", detcount::cli::kVersion);

  SweepConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string config_path;
  const std::vector<std::pair<Mode, std::string>> modes{
      {Mode::count, "Single point: exact, main term, error, normalized error"},
      {Mode::sweep, "Grid over --H x --delta"},
      {Mode::tau, "Restricted divisor moments (or shifted sums with --delta)"},
      {Mode::hyperbola, "Seeded modular-hyperbola error diagnostics"},
      {Mode::lemmas, "Summation identities against their main terms"},
      {Mode::casework, "Region sums, direct vs lattice-point evaluation"},
      {Mode::fit, "Fit exponents from an existing sweep CSV"},
      {Mode::fixtures, "Brute-force reference values"},
  };
  std::vector<std::pair<CLI::App*, std::vector<Binding>>> subs;
  for (const auto& [mode, help] : modes) {
    CLI::App* sub = app.add_subcommand(detcount::cli::to_string(mode), help);
    subs.emplace_back(sub, add_flags(*sub, cfg, config_path));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : detcount::cli::kUsage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i].first->parsed()) continue;
    cfg.mode = modes[i].first;
    if (!config_path.empty()) {
      SweepConfig base;
      base.jobs = cfg.jobs;
      try {
        std::ifstream in(config_path);
        detcount::cli::apply_json(nlohmann::json::parse(in), base);
      } catch (const std::exception& e) {
        std::cerr << "error: config file: " << e.what() << '\n';
        return detcount::cli::kUsage;
      }
      for (const auto& b : subs[i].second)
        if (b.option->count() == 0) b.take_default(base);
    }
  }

  if (cfg.output.empty()) return detcount::cli::run(cfg, std::cout, std::cerr);
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << cfg.output << '\n';
    return detcount::cli::kUsage;
  }
  return detcount::cli::run(cfg, out, std::cerr);
}
