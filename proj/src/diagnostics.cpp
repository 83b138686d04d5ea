#include "detcount/diagnostics.hpp"

#include "detcount/parallel.hpp"
#include "detcount/rng.hpp"

namespace detcount {

namespace {

constexpr Int kMaxModulus = 500;
constexpr Int kMaxSide = 2000;
constexpr Int kMaxResidue = 10'000;

Int random_residue(SplitMix64& rng) {
  const Int k = rng.uniform(1, kMaxResidue);
  return rng.uniform(0, 1) ? k : -k;
}

template <typename Query>
DiagnosticSummary summarize(const std::vector<Query>& queries, unsigned jobs,
                            AsymptoticReport (*fn)(const Query&, double), double epsilon) {
  DiagnosticSummary s;
  s.reports = parallel_map<AsymptoticReport>(queries.size(), jobs, [&](std::size_t i) { return fn(queries[i], epsilon); });
  for (std::size_t i = 0; i < s.reports.size(); ++i)
    if (s.reports[i].normalized > s.max_normalized) {
      s.max_normalized = s.reports[i].normalized;
      s.argmax = i;
    }
  return s;
}

}  // namespace

std::vector<HyperbolaQuery> random_box_queries(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<HyperbolaQuery> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    HyperbolaQuery q;
    q.q = rng.uniform(1, kMaxModulus);
    q.K = random_residue(rng);
    q.U = static_cast<double>(rng.uniform(0, kMaxSide));
    q.V = static_cast<double>(rng.uniform(0, kMaxSide));
    q.X = static_cast<double>(rng.uniform(1, kMaxSide));
    q.Y = static_cast<double>(rng.uniform(1, kMaxSide));
    out.push_back(q);
  }
  return out;
}

std::vector<CurveQuery> random_curve_queries(std::uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<CurveQuery> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CurveQuery q;
    q.q = rng.uniform(1, kMaxModulus);
    q.K = random_residue(rng);
    const Int U = rng.uniform(0, kMaxSide);
    q.U = static_cast<double>(U);
    q.X = static_cast<double>(rng.uniform(1, kMaxSide));
    q.bound = HyperbolicBound{static_cast<double>(rng.uniform(1, kMaxSide * (U + 1)))};
    out.push_back(q);
  }
  return out;
}

DiagnosticSummary run_box_diagnostics(const std::vector<HyperbolaQuery>& queries, double epsilon, unsigned jobs) {
  return summarize(queries, jobs, &report_box, epsilon);
}

DiagnosticSummary run_curve_diagnostics(const std::vector<CurveQuery>& queries, double epsilon, unsigned jobs) {
  return summarize(queries, jobs, &report_curve, epsilon);
}

}  // namespace detcount
