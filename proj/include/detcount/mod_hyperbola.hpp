#pragma once

#include <variant>
#include <vector>

#include "detcount/types.hpp"

namespace detcount {

/// Points (u, v) with U < u <= U + X, V < v <= V + Y and uv == K (mod q).
/// Endpoints may be real; only the integer points inside matter.
struct HyperbolaQuery {
  Int K = 0;
  Int q = 1;
  double U = 0;
  double V = 0;
  double X = 0;
  double Y = 0;
};

/// u -> A / u. Needs U >= 0 so every integer u in range is positive.
struct HyperbolicBound {
  double A = 0;
};

/// Explicit bound for consecutive integers u = first_u, first_u + 1, ...
struct TabulatedBound {
  Int first_u = 1;
  std::vector<double> values;
};

using CurveBound = std::variant<HyperbolicBound, TabulatedBound>;

/// Points with U < u <= U + X, 0 < v <= f(u) and uv == K (mod q).
struct CurveQuery {
  Int K = 0;
  Int q = 1;
  double U = 0;
  double X = 0;
  CurveBound bound = HyperbolicBound{};
};

/// A main-term value. `convention` is set for K == 0, where every r divides K
/// and the D = q value is returned.
struct MainTerm {
  double value = 0;
  bool convention = false;
};

struct AsymptoticReport {
  Count exact = 0;
  double main = 0;
  double error = 0;
  double bound = 0;
  double normalized = 0;
};

/// Integer range (lo, hi] -> [floor(lo) + 1, floor(hi)].
struct IntRange {
  Int first;
  Int last;
  Int size() const { return last >= first ? last - first + 1 : 0; }
};
IntRange integer_points(double start, double length);

Count count_box(const HyperbolaQuery& query);
MainTerm main_term_box(const HyperbolaQuery& query);
double error_bound_box(const HyperbolaQuery& query, double epsilon);

Count count_under_curve(const CurveQuery& query);
MainTerm main_term_curve(const CurveQuery& query);
/// Needs a hyperbolic bound; L = u0^3 / A at the first integer point u0.
double error_bound_curve(const CurveQuery& query, double epsilon);

/// The raw nominal bounds, for evaluation at given (q, D, X, L).
double nominal_box_bound(Int q, Int D, double X, double epsilon);
double nominal_curve_bound(Int q, Int D, double X, double L, double epsilon);

AsymptoticReport report_box(const HyperbolaQuery& query, double epsilon);
AsymptoticReport report_curve(const CurveQuery& query, double epsilon);

}  // namespace detcount
