#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detcount/divisor_tables.hpp"
#include "detcount/mod_hyperbola.hpp"
#include "detcount/types.hpp"

namespace detcount {

enum class MainTermKind {
  THEOREM_MAIN,              // (96/pi^2) (sigma(|D|)/|D|) H^2
  DELTA0_MAIN,               // (96/pi^2) H^2 log H
  SIGN_LEMMA_MAIN,           // (12/pi^2) H^2 sum_{r | D, r <= H} 1/r
  TAU_SQ_MAIN,               // (12/pi^2) N^2 log N
  SHIFTED_LOG_CANDIDATE,     // (12/pi^2) (sigma(D)/D) N^2 log N
  SHIFTED_NOLOG_CANDIDATE,   // (12/pi^2) N^2 sum_{r | D, r <= N} 1/r
};

std::string to_string(MainTermKind kind);
bool needs_delta(MainTermKind kind);

/// Natural logarithms throughout. Rejects delta == 0 for delta-dependent kinds.
double main_term(MainTermKind kind, Int H, Int delta = 0);

/// exact = fast_count(H, delta) against THEOREM_MAIN (delta != 0) or
/// DELTA0_MAIN (delta == 0). bound = H^eps max(H^(5/3), |delta|) for
/// delta != 0 and H^eps H^2 for delta == 0.
AsymptoticReport report(Int H, Int delta, double epsilon = 0.1, const Budget& budget = {}, unsigned jobs = 0);
AsymptoticReport report(const ProductCount& products, Int delta, double epsilon = 0.1, unsigned jobs = 0);
double report_bound(Int H, Int delta, double epsilon);

struct FitRow {
  double H;
  double exact;
  double main;
};

struct ErrorFit {
  double exponent = 0;
  double log_constant = 0;
  double r_squared = 0;
  /// (H, |error|) for the points used; zero errors are dropped.
  std::vector<std::pair<double, double>> points;
  /// Every error was exactly zero; exponent is -inf and r_squared 1.
  bool all_zero = false;
};

/// OLS fit of log|exact - main| = exponent * log H + log_constant.
/// Needs >= 3 rows with distinct H and >= 2 nonzero errors.
ErrorFit fit_error_exponent(const std::vector<FitRow>& rows);

struct LogLinearFit {
  double a = 0;
  double b = 0;
  double a_stderr = 0;
  double b_stderr = 0;
  double r_squared = 0;
};

/// OLS fit of value / N^2 = a log N + b. Needs >= 2 distinct N; standard
/// errors are reported as 0 when there are only two points.
LogLinearFit fit_linear_in_logN(const std::vector<std::pair<double, double>>& rows);

/// Outcome of testing shifted_sum(N, delta)/N^2 = a log N + b against the
/// log candidate (slope (12/pi^2) sigma(delta)/delta) and the log-free one
/// (slope 0).
struct ShiftedDiscrimination {
  LogLinearFit fit;
  double log_slope = 0;
  double nolog_slope = 0;
  /// |a - candidate| in units of a's standard error (inf if it is 0).
  double z_log = 0;
  double z_nolog = 0;
  /// Fitted error exponents of value - candidate main term.
  ErrorFit log_error;
  ErrorFit nolog_error;
  MainTermKind selected = MainTermKind::SHIFTED_NOLOG_CANDIDATE;
};

/// rows are (N, shifted_sum(N, delta)); delta >= 1.
ShiftedDiscrimination discriminate_shifted(const std::vector<std::pair<double, double>>& rows, Int delta);

}  // namespace detcount
