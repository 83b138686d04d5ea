#include "detcount/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "detcount/arith.hpp"
#include "detcount/exact_count.hpp"
#include "detcount/summation.hpp"

namespace detcount {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

double sigma_ratio(Int delta) {
  const Int d = delta < 0 ? -delta : delta;
  return static_cast<double>(sigma(d)) / static_cast<double>(d);
}

struct Ols {
  double slope = 0, intercept = 0, slope_se = 0, intercept_se = 0, r_squared = 0;
};

Ols ordinary_least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0)) throw ArgumentError("least-squares fit is singular (all abscissae equal)");
  Ols f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    sse += r * r;
  }
  f.r_squared = syy > 0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  if (x.size() > 2) {
    const double s2 = sse / (n - 2);
    f.slope_se = std::sqrt(s2 / sxx);
    f.intercept_se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  }
  return f;
}

void require_distinct(const std::vector<double>& xs, std::size_t minimum, const char* what) {
  const std::set<double> distinct(xs.begin(), xs.end());
  if (distinct.size() < minimum || distinct.size() != xs.size())
    throw ArgumentError(std::string(what) + ": need at least " + std::to_string(minimum) + " distinct abscissae");
}

double z_score(double value, double target, double se) {
  const double d = std::fabs(value - target);
  if (se > 0) return d / se;
  return d == 0 ? 0 : std::numeric_limits<double>::infinity();
}

}  // namespace

std::string to_string(MainTermKind kind) {
  switch (kind) {
    case MainTermKind::THEOREM_MAIN: return "THEOREM_MAIN";
    case MainTermKind::DELTA0_MAIN: return "DELTA0_MAIN";
    case MainTermKind::SIGN_LEMMA_MAIN: return "SIGN_LEMMA_MAIN";
    case MainTermKind::TAU_SQ_MAIN: return "TAU_SQ_MAIN";
    case MainTermKind::SHIFTED_LOG_CANDIDATE: return "SHIFTED_LOG_CANDIDATE";
    case MainTermKind::SHIFTED_NOLOG_CANDIDATE: return "SHIFTED_NOLOG_CANDIDATE";
  }
  return "?";
}

bool needs_delta(MainTermKind kind) {
  return kind == MainTermKind::THEOREM_MAIN || kind == MainTermKind::SIGN_LEMMA_MAIN ||
         kind == MainTermKind::SHIFTED_LOG_CANDIDATE || kind == MainTermKind::SHIFTED_NOLOG_CANDIDATE;
}

double main_term(MainTermKind kind, Int H, Int delta) {
  if (H < 1) throw ArgumentError("main_term: H must be >= 1");
  if (needs_delta(kind) && delta == 0) throw ArgumentError("main_term: " + to_string(kind) + " needs delta != 0");
  const double h = static_cast<double>(H);
  const Int ad = delta < 0 ? -delta : delta;
  switch (kind) {
    case MainTermKind::THEOREM_MAIN: return 96.0 / kPiSq * sigma_ratio(delta) * h * h;
    case MainTermKind::DELTA0_MAIN: return 96.0 / kPiSq * h * h * std::log(h);
    case MainTermKind::SIGN_LEMMA_MAIN:
    case MainTermKind::SHIFTED_NOLOG_CANDIDATE: return 12.0 / kPiSq * h * h * divisor_tail(ad, H).partial;
    case MainTermKind::TAU_SQ_MAIN: return 12.0 / kPiSq * h * h * std::log(h);
    case MainTermKind::SHIFTED_LOG_CANDIDATE: return 12.0 / kPiSq * sigma_ratio(delta) * h * h * std::log(h);
  }
  return 0;
}

double report_bound(Int H, Int delta, double epsilon) {
  const double h = static_cast<double>(H);
  const double scale = delta == 0 ? h * h : std::max(std::pow(h, 5.0 / 3.0), std::fabs(static_cast<double>(delta)));
  return std::pow(h, epsilon) * scale;
}

AsymptoticReport report(const ProductCount& products, Int delta, double epsilon, unsigned jobs) {
  const Int H = products.H();
  AsymptoticReport r;
  r.exact = fast_count(products, delta, jobs);
  r.main = main_term(delta == 0 ? MainTermKind::DELTA0_MAIN : MainTermKind::THEOREM_MAIN, H, delta);
  r.error = to_double(r.exact) - r.main;
  r.bound = report_bound(H, delta, epsilon);
  r.normalized = std::fabs(r.error) / r.bound;
  return r;
}

AsymptoticReport report(Int H, Int delta, double epsilon, const Budget& budget, unsigned jobs) {
  if (H < 1) throw ArgumentError("report: H must be >= 1");
  return report(ProductCount(H, budget), delta, epsilon, jobs);
}

ErrorFit fit_error_exponent(const std::vector<FitRow>& rows) {
  std::vector<double> hs;
  for (const auto& r : rows) hs.push_back(r.H);
  require_distinct(hs, 3, "fit_error_exponent");
  ErrorFit fit;
  std::vector<double> x, y;
  for (const auto& r : rows) {
    if (!(r.H > 0)) throw ArgumentError("fit_error_exponent: H must be positive");
    const double e = std::fabs(r.exact - r.main);
    if (e > 0) {
      fit.points.emplace_back(r.H, e);
      x.push_back(std::log(r.H));
      y.push_back(std::log(e));
    }
  }
  if (fit.points.empty()) {
    fit.all_zero = true;
    fit.exponent = -std::numeric_limits<double>::infinity();
    fit.log_constant = -std::numeric_limits<double>::infinity();
    fit.r_squared = 1;
    return fit;
  }
  if (fit.points.size() < 2) throw ArgumentError("fit_error_exponent: fewer than two nonzero errors");
  const Ols f = ordinary_least_squares(x, y);
  fit.exponent = f.slope;
  fit.log_constant = f.intercept;
  fit.r_squared = f.r_squared;
  return fit;
}

LogLinearFit fit_linear_in_logN(const std::vector<std::pair<double, double>>& rows) {
  std::vector<double> ns, x, y;
  for (const auto& [N, value] : rows) {
    if (!(N > 1)) throw ArgumentError("fit_linear_in_logN: N must be > 1");
    ns.push_back(N);
    x.push_back(std::log(N));
    y.push_back(value / (N * N));
  }
  require_distinct(ns, 2, "fit_linear_in_logN");
  const Ols f = ordinary_least_squares(x, y);
  return {f.slope, f.intercept, f.slope_se, f.intercept_se, f.r_squared};
}

ShiftedDiscrimination discriminate_shifted(const std::vector<std::pair<double, double>>& rows, Int delta) {
  if (delta < 1) throw ArgumentError("discriminate_shifted: delta must be >= 1");
  ShiftedDiscrimination d;
  d.fit = fit_linear_in_logN(rows);
  d.log_slope = 12.0 / kPiSq * sigma_ratio(delta);
  d.nolog_slope = 0;
  d.z_log = z_score(d.fit.a, d.log_slope, d.fit.a_stderr);
  d.z_nolog = z_score(d.fit.a, d.nolog_slope, d.fit.a_stderr);

  std::vector<FitRow> log_rows, nolog_rows;
  for (const auto& [N, value] : rows) {
    const Int n = static_cast<Int>(N);
    log_rows.push_back({N, value, main_term(MainTermKind::SHIFTED_LOG_CANDIDATE, n, delta)});
    nolog_rows.push_back({N, value, main_term(MainTermKind::SHIFTED_NOLOG_CANDIDATE, n, delta)});
  }
  if (rows.size() >= 3) {
    d.log_error = fit_error_exponent(log_rows);
    d.nolog_error = fit_error_exponent(nolog_rows);
  }
  const double dist_log = std::fabs(d.fit.a - d.log_slope);
  const double dist_nolog = std::fabs(d.fit.a - d.nolog_slope);
  d.selected = dist_nolog <= dist_log ? MainTermKind::SHIFTED_NOLOG_CANDIDATE : MainTermKind::SHIFTED_LOG_CANDIDATE;
  return d;
}

}  // namespace detcount
