// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance            run everything
//   acceptance --only 5,8 run a subset

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "detcount/arith.hpp"
#include "detcount/asymptotics.hpp"
#include "detcount/casework.hpp"
#include "detcount/diagnostics.hpp"
#include "detcount/divisor_tables.hpp"
#include "detcount/exact_count.hpp"
#include "detcount/parallel.hpp"
#include "detcount/rng.hpp"
#include "detcount/summation.hpp"
#include "sweep.hpp"

using namespace detcount;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

unsigned g_jobs = 1;

// 1 ------------------------------------------------------------------------
Outcome oracle_equivalence() {
  long checked = 0;
  for (Int H = 1; H <= 8; ++H) {
    const ProductCount pc(H);
    for (Int det = -2 * H * H; det <= 2 * H * H; ++det, ++checked)
      if (fast_count(pc, det, g_jobs) != naive_count(H, det, 2, g_jobs))
        return {false, fmt("mismatch at H=%lld delta=%lld", (long long)H, (long long)det)};
  }
  SplitMix64 rng(20240101);
  for (Int H : {12, 16, 20}) {
    const ProductCount pc(H);
    for (int i = 0; i < 200; ++i, ++checked) {
      const Int det = rng.uniform(-2 * H * H, 2 * H * H);
      if (fast_count(pc, det, g_jobs) != naive_count(H, det, 2, g_jobs))
        return {false, fmt("mismatch at H=%lld delta=%lld", (long long)H, (long long)det)};
    }
  }
  return {true, fmt("%ld (H, delta) points, fast == naive", checked)};
}

// 2 ------------------------------------------------------------------------
Outcome fixed_values() {
  // Values confirmed by full enumeration before freezing. The criterion's
  // listed 273 and 136 for H = 2 are what the product law c2 = 4 tau_H would
  // give; enumeration gives c2 = 2 tau_H and the totals below.
  struct Fixture {
    Int H, det;
    Count value;
  };
  const Fixture fixtures[] = {{1, 1, 20}, {1, 0, 33}, {2, 0, 129}, {2, 1, 52}};
  std::string detail;
  for (const auto& f : fixtures) {
    const Count naive = naive_count(f.H, f.det, 2, g_jobs);
    const Count fast = fast_count(f.H, f.det);
    if (naive != f.value || fast != f.value)
      return {false, fmt("D2(%lld,%lld): naive %s fast %s expected %s", (long long)f.H, (long long)f.det,
                         to_string(naive).c_str(), to_string(fast).c_str(), to_string(f.value).c_str())};
  }
  return {true,
          "D2(1,1)=20 D2(1,0)=33 D2(2,0)=129 D2(2,1)=52 by naive and fast; listed 273/136 contradict enumeration"};
}

// 3 ------------------------------------------------------------------------
Outcome sign_decomposition() {
  int points = 0;
  for (Int H : {5, 10, 20, 30})
    for (Int det : {Int{0}, Int{1}, Int{-1}, Int{3}, Int{-3}, Int{7}, Int{-7}, Int{25}, 2 * H * H}) {
      const auto r = decompose(H, det, {}, g_jobs);
      ++points;
      if (!r.assembly_ok) return {false, fmt("H=%lld delta=%lld: %s", (long long)H, (long long)det, r.failure.c_str())};
    }
  return {true, fmt("%d points: total = 4(c111 + c11-1) + zero_entry, 8 class identities", points)};
}

// 4 ------------------------------------------------------------------------
Outcome casework_exactness() {
  int points = 0;
  for (Int H : {10, 20, 40}) {
    const TauTable table(H);
    for (Int det : {Int{1}, Int{3}, Int{7}, Int{25}, H, 2 * H, H * H / 2}) {
      ++points;
      const auto where = fmt("H=%lld delta=%lld", (long long)H, (long long)det);
      Count g = 0, j = 0;
      for (RegionG r : kRegionsG) {
        const Count direct = region_sum_G(H, det, r, g_jobs);
        const auto via = region_sum_G_via_hyperbola(H, det, r);
        if (via.mismatch_c || via.value != direct)
          return {false, where + " region " + to_string(r) + " hyperbola disagrees" +
                             (via.mismatch_c ? " first at c=" + std::to_string(*via.mismatch_c) : "")};
        g += direct;
      }
      for (RegionJ r : kRegionsJ) {
        const Count direct = region_sum_J(H, det, r, g_jobs);
        const auto via = region_sum_J_via_hyperbola(H, det, r);
        if (via.mismatch_c || via.value != direct) return {false, where + " region " + to_string(r) + " disagrees"};
        j += direct;
      }
      if (g != sign_class_count(H, det, {1, 1, 1}, g_jobs)) return {false, where + ": G regions != c111"};
      const Count c11m = sign_class_count(H, det, {1, 1, -1}, g_jobs);
      if (j != c11m || c11m != shifted_sum(table, det, g_jobs))
        return {false, where + ": J regions, c11-1 and shifted_sum differ"};
    }
  }
  return {true, fmt("%d points: G regions = c111, J regions = c11-1 = shifted_sum, hyperbola == direct", points)};
}

// 5 ------------------------------------------------------------------------
Outcome theorem_convergence() {
  const std::vector<Int> Hs{250, 500, 1000, 2000};
  const std::vector<Int> deltas{1, 2, 6, 12};
  std::vector<std::vector<FitRow>> rows(deltas.size());
  std::vector<double> ratio_at_top(deltas.size());
  for (Int H : Hs) {
    const ProductCount pc(H);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      const auto r = report(pc, deltas[i], 0.1, g_jobs);
      rows[i].push_back({double(H), to_double(r.exact), r.main});
      if (H == Hs.back()) ratio_at_top[i] = to_double(r.exact) / r.main;
    }
  }
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const auto f = fit_error_exponent(rows[i]);
    const double dev = std::fabs(ratio_at_top[i] - 1);
    ok = ok && dev <= 0.15 && f.exponent <= 1.9;
    detail += fmt("%sdelta=%lld |ratio-1|=%.4f exponent=%.3f r2=%.3f", i ? "; " : "", (long long)deltas[i], dev,
                  f.exponent, f.r_squared);
  }
  return {ok, detail};
}

// 6 ------------------------------------------------------------------------
Outcome delta_zero_fit() {
  std::vector<std::pair<double, double>> rows;
  for (Int H : {500, 1000, 2000, 4000}) rows.emplace_back(double(H), to_double(fast_count(H, 0, {}, g_jobs)));
  const auto f = fit_linear_in_logN(rows);
  const double expected = 96.0 / kPi2;
  const double dev = std::fabs(f.a / expected - 1);
  return {dev <= 0.05, fmt("a=%.5f (96/pi^2=%.5f, rel dev %.4f) b=%.4f r2=%.6f", f.a, expected, dev, f.b, f.r_squared)};
}

// 7 ------------------------------------------------------------------------
Outcome tau_identities() {
  for (Int N : {10, 100, 1000, 3000}) {
    const Count s = tau_moment(TauTable(N), 1, g_jobs);
    if (s != static_cast<Count>(N * N)) return {false, fmt("sum tau_N != N^2 at N=%lld", (long long)N)};
  }
  std::vector<std::pair<double, double>> second, first;
  for (Int N : {500, 1000, 2000, 4000}) {
    const TauTable t(N);
    second.emplace_back(double(N), to_double(tau_moment(t, 2, g_jobs)));
    const Count m1 = tau_moment(t, 1, g_jobs);
    if (m1 != static_cast<Count>(N * N)) return {false, fmt("D1 != 1 at N=%lld", (long long)N)};
    first.emplace_back(double(N), to_double(m1));
  }
  const auto f = fit_linear_in_logN(second);
  const auto g = fit_linear_in_logN(first);
  const double expected = 12.0 / kPi2;
  const double dev = std::fabs(f.a / expected - 1);
  const bool d1 = std::fabs(g.a) < 1e-12 && std::fabs(g.b - 1) < 1e-12;
  return {dev <= 0.05 && d1, fmt("sum tau_N = N^2 exactly; second moment a=%.5f (12/pi^2=%.5f, rel dev %.4f); "
                                 "k=1: moment/N^2 = 1 exactly, fit (a,b)=(%.3g,%.12g)",
                                 f.a, expected, dev, g.a, g.b)};
}

// 8 ------------------------------------------------------------------------
Outcome shifted_discrimination() {
  bool ok = true;
  std::string detail;
  for (Int delta : {1, 6}) {
    std::vector<std::pair<double, double>> rows;
    for (Int N : {500, 1000, 2000, 4000}) rows.emplace_back(double(N), to_double(shifted_sum(N, delta, {}, g_jobs)));
    const auto d = discriminate_shifted(rows, delta);
    // Resolution: the slope counts as zero when it is within 1% of the
    // separation between the two candidate slopes.
    const bool zero = std::fabs(d.fit.a) <= 0.01 * std::fabs(d.log_slope - d.nolog_slope);
    ok = ok && zero && d.selected == MainTermKind::SHIFTED_NOLOG_CANDIDATE;
    detail += fmt("%sdelta=%lld slope=%.5f+-%.5f log-slope=%.5f z_nolog=%.1f z_log=%.0f err-exp nolog=%.2f log=%.2f -> %s",
                  delta == 1 ? "" : "; ", (long long)delta, d.fit.a, d.fit.a_stderr, d.log_slope, d.z_nolog, d.z_log,
                  d.nolog_error.exponent, d.log_error.exponent,
                  d.selected == MainTermKind::SHIFTED_NOLOG_CANDIDATE ? "no-log" : "log");
  }
  return {ok, detail};
}

// 9 ------------------------------------------------------------------------
Outcome hyperbola_diagnostics() {
  const auto box = run_box_diagnostics(random_box_queries(9001, 500), 0.25, g_jobs);
  const auto curve = run_curve_diagnostics(random_curve_queries(9002, 500), 0.25, g_jobs);
  return {box.max_normalized <= 10 && curve.max_normalized <= 10,
          fmt("500+500 seeded queries, max |count-main|/bound: box %.4f (query %zu), curve %.4f (query %zu)",
              box.max_normalized, box.argmax, curve.max_normalized, curve.argmax)};
}

// 10 -----------------------------------------------------------------------
// Direct enumeration of each defining set, accumulated as X grows.
struct NaiveXY {
  static constexpr Int kMax = 300;
  std::vector<std::vector<Int>> g;  // gcd table up to 2 * kMax

  NaiveXY() : g(2 * kMax + 1, std::vector<Int>(2 * kMax + 1)) {
    for (Int x = 0; x <= 2 * kMax; ++x)
      for (Int y = 0; y <= 2 * kMax; ++y) g[x][y] = std::gcd(x, y);
  }

  // out[X] for X = 0..kMax
  std::vector<double> series(int variant, Int Y, Int r) const {
    std::vector<double> out(kMax + 1, 0.0);
    double s = 0;
    const double rd = double(r);
    for (Int X = 1; X <= kMax; ++X) {
      switch (variant) {
        case 1:  // new pairs have max(x, y) = X
          for (Int y = 1; y <= X; ++y)
            if (g[X][y] == r) s += rd / double(X * y) * (y == X ? 1 : 2);
          break;
        case 2:  // new row x = X, 0 < y < X + Y
          for (Int y = 1; y < X + Y; ++y)
            if (g[X][y] == r) s += rd / double(X);
          break;
        case 3:  // new column y = X, x < X - Y
          for (Int x = 1; x + Y < X; ++x)
            if (g[x][X] == r) s += rd / double(X);
          break;
        default:  // new row x = X, y <= Y
          for (Int y = 1; y <= Y; ++y)
            if (g[X][y] == r) s += rd / double(y);
          break;
      }
      out[X] = s;
    }
    return out;
  }
};

Outcome summation_lemmas() {
  const NaiveXY naive;
  auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(b)); };
  // exhaustive grid, split by r across workers
  const auto per_r = parallel_map<std::pair<long, std::string>>(10, g_jobs, [&](std::size_t i) {
    const Int r = Int(i) + 1;
    long n = 0;
    const auto v1 = naive.series(1, 0, r);
    for (Int X = r; X <= NaiveXY::kMax; ++X, ++n)
      if (!close(xy_sum_exact(1, double(X), 0, r), v1[X]))
        return std::pair{n, fmt("variant 1 X=%lld r=%lld", (long long)X, (long long)r)};
    for (Int Y = 1; Y <= NaiveXY::kMax; ++Y)
      for (int variant = 2; variant <= 4; ++variant) {
        if (variant == 4 && Y < r) continue;
        const auto ref = naive.series(variant, Y, r);
        for (Int X = r; X <= NaiveXY::kMax; ++X) {
          if (variant == 3 && Y > X) continue;
          ++n;
          if (!close(xy_sum_exact(variant, double(X), double(Y), r), ref[X]))
            return std::pair{n, fmt("variant %d X=%lld Y=%lld r=%lld", variant, (long long)X, (long long)Y,
                                    (long long)r)};
        }
      }
    return std::pair{n, std::string()};
  });
  long grid = 0;
  for (const auto& [n, failure] : per_r) {
    grid += n;
    if (!failure.empty()) return {false, "exact != naive at " + failure};
  }

  double max_ratio = 0;
  std::string worst;
  for (double X : {1e2, 1e3, 1e4})
    for (Int r : {1, 2, 5, 10})
      for (double Y : {X / 10, X / 2})
        for (int variant = 1; variant <= 4; ++variant) {
          const auto rep = xy_sum(variant, X, Y, r);
          if (rep.ratio > max_ratio) {
            max_ratio = rep.ratio;
            worst = fmt("variant %d X=%g Y=%g r=%lld", variant, X, Y, (long long)r);
          }
        }
  for (double X : {1e2, 1e3, 1e4})
    for (const auto& [name, rep] : {std::pair{"phi_ratio", phi_ratio_report(Int(X))},
                                    std::pair{"phi_over_square", phi_over_square_report(Int(X))},
                                    std::pair{"gcd_power", gcd_power_report(Int(X), 720, 0.5, 1.0)}})
      if (rep.ratio > max_ratio) {
        max_ratio = rep.ratio;
        worst = fmt("%s X=%g", name, X);
      }

  long tails = 0;
  for (Int d = 1; d <= 10000; ++d)
    for (Int H : {10, 100, 1000}) {
      ++tails;
      if (!divisor_tail_bound_holds(d, H)) return {false, fmt("divisor tail fails at delta=%lld H=%lld", (long long)d, (long long)H)};
    }
  return {max_ratio <= 25, fmt("%ld grid points exact == naive; max envelope ratio %.3f (%s) <= 25; %ld tail "
                               "inequalities hold",
                               grid, max_ratio, worst.c_str(), tails)};
}

// 11 -----------------------------------------------------------------------
Outcome determinism() {
  auto capture = [](cli::SweepConfig c, unsigned jobs) {
    c.jobs = jobs;
    std::ostringstream out, err;
    const int code = cli::run(c, out, err);
    return std::pair{code, out.str()};
  };
  std::vector<cli::SweepConfig> configs;
  {
    cli::SweepConfig c;
    c.mode = cli::Mode::sweep;
    c.H = {100, 200, 400};
    c.delta = {0, 1, 6, -7};
    c.fit = true;
    c.timing = false;
    configs.push_back(c);
    c.format = "json";
    configs.push_back(c);
  }
  {
    cli::SweepConfig c;
    c.mode = cli::Mode::tau;
    c.N = {100, 200, 300};
    c.delta = {1, 6};
    c.timing = false;
    configs.push_back(c);
  }
  {
    cli::SweepConfig c;
    c.mode = cli::Mode::hyperbola;
    c.seed = 42;
    c.queries = 200;
    configs.push_back(c);
  }
  std::size_t bytes = 0;
  for (const auto& c : configs) {
    const auto a = capture(c, 1), b = capture(c, 1), p = capture(c, 8);
    if (a.first != 0) return {false, "mode " + cli::to_string(c.mode) + " exited " + std::to_string(a.first)};
    if (a.second != b.second) return {false, "re-run differs in mode " + cli::to_string(c.mode)};
    if (a.second != p.second) return {false, "--jobs 1 vs --jobs 8 differ in mode " + cli::to_string(c.mode)};
    bytes += a.second.size();
  }
  return {true, fmt("%zu configs (sweep csv/json, tau, hyperbola), %zu bytes identical across re-runs and jobs 1/8",
                    configs.size(), bytes)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  g_jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--only", only, "Criteria to run (default all)")->delimiter(',')->check(CLI::Range(1, 11));
  app.add_option("--jobs", g_jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  set_default_jobs(g_jobs);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"fixed small values", fixed_values},
      {"sign decomposition exactness", sign_decomposition},
      {"casework exactness", casework_exactness},
      {"main-term convergence, delta != 0", theorem_convergence},
      {"H^2 log H coefficient, delta = 0", delta_zero_fit},
      {"tau_N identities and second moment", tau_identities},
      {"shifted-sum log / no-log discrimination", shifted_discrimination},
      {"modular hyperbola diagnostics", hyperbola_diagnostics},
      {"summation lemmas", summation_lemmas},
      {"determinism", determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = int(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
