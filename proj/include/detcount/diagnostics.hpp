#pragma once

#include <cstdint>
#include <vector>

#include "detcount/mod_hyperbola.hpp"

namespace detcount {

/// Seeded query sets for the modular-hyperbola error diagnostics.
/// Box: q in [1, 500], U, V in [0, 2000], X, Y in [1, 2000], 1 <= |K| <= 10^4.
/// Curve: same q, K, U, X, and A in [1, 2000 (U + 1)] so the curve starts
/// at height <= 2000.
std::vector<HyperbolaQuery> random_box_queries(std::uint64_t seed, std::size_t count);
std::vector<CurveQuery> random_curve_queries(std::uint64_t seed, std::size_t count);

struct DiagnosticSummary {
  std::vector<AsymptoticReport> reports;
  double max_normalized = 0;
  std::size_t argmax = 0;
};

DiagnosticSummary run_box_diagnostics(const std::vector<HyperbolaQuery>& queries, double epsilon, unsigned jobs = 0);
DiagnosticSummary run_curve_diagnostics(const std::vector<CurveQuery>& queries, double epsilon, unsigned jobs = 0);

}  // namespace detcount
