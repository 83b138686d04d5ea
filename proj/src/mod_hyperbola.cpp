#include "detcount/mod_hyperbola.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detcount/arith.hpp"

namespace detcount {

namespace {

void require_modulus(Int q) {
  if (q < 1) throw ArgumentError("modulus q must be >= 1, got " + std::to_string(q));
}

// #{u in [first, last] : u == rho (mod q)}
Int count_residue(const IntRange& r, Int rho, Int q) {
  if (r.size() == 0) return 0;
  return static_cast<Int>(floor_div(static_cast<Wide>(r.last) - rho, q) -
                          floor_div(static_cast<Wide>(r.first) - 1 - rho, q));
}

// Calls fn(u_representative, multiplicity) once per residue class of u mod q
// when the range is longer than q, otherwise once per u.
template <typename Fn>
void for_each_u_class(const IntRange& us, Int q, Fn&& fn) {
  if (us.size() > q) {
    for (Int rho = 0; rho < q; ++rho) {
      const Int mult = count_residue(us, rho, q);
      if (mult > 0) fn(rho, mult);
    }
  } else {
    for (Int u = us.first; u <= us.last; ++u) fn(u, 1);
  }
}

// floor(f(u)) for the bound at an integer point.
Int floor_bound(const CurveBound& bound, Int u, double* value) {
  if (const auto* h = std::get_if<HyperbolicBound>(&bound)) {
    const double A = h->A;
    *value = A / static_cast<double>(u);
    if (A == std::floor(A) && std::fabs(A) < 9.0e15) return static_cast<Int>(floor_div(static_cast<Int>(A), u));
    return static_cast<Int>(std::floor(*value));
  }
  const auto& t = std::get<TabulatedBound>(bound);
  const Int idx = u - t.first_u;
  if (idx < 0 || idx >= static_cast<Int>(t.values.size()))
    throw ArgumentError("tabulated bound has no value at u = " + std::to_string(u));
  *value = t.values[static_cast<std::size_t>(idx)];
  return static_cast<Int>(std::floor(*value));
}

void validate_curve(const CurveQuery& query) {
  require_modulus(query.q);
  if (query.X < 0) throw ArgumentError("curve query: X must be >= 0");
  if (std::holds_alternative<HyperbolicBound>(query.bound)) {
    if (query.U < 0) throw ArgumentError("hyperbolic bound needs U >= 0");
    if (std::get<HyperbolicBound>(query.bound).A < 0) throw ArgumentError("hyperbolic bound needs A >= 0");
  }
}

// gcd(u, q) if it divides K, else 0: the weight r in sum_{r|K} sum_{gcd(u,q)=r} r.
Int divisor_weight(Int u, Int q, Int K) {
  const Int r = gcd(u, q);
  return mod_floor(K, r) == 0 ? r : 0;
}

}  // namespace

IntRange integer_points(double start, double length) {
  if (length < 0) throw ArgumentError("interval length must be >= 0");
  const auto first = static_cast<Int>(std::floor(start)) + 1;
  const auto last = static_cast<Int>(std::floor(start + length));
  return {first, last};
}

Count count_box(const HyperbolaQuery& query) {
  require_modulus(query.q);
  if (query.X < 0 || query.Y < 0) throw ArgumentError("box query: X and Y must be >= 0");
  const IntRange us = integer_points(query.U, query.X);
  const IntRange vs = integer_points(query.V, query.Y);
  if (us.size() == 0 || vs.size() == 0) return 0;
  Count total = 0;
  for_each_u_class(us, query.q, [&](Int u, Int mult) {
    const Int per_u = count_congruent(vs.first, vs.last, u, query.K, query.q);
    total = checked_add(total, static_cast<Count>(per_u) * static_cast<Count>(mult));
  });
  return total;
}

MainTerm main_term_box(const HyperbolaQuery& query) {
  require_modulus(query.q);
  const IntRange us = integer_points(query.U, query.X);
  double weight = 0;
  for_each_u_class(us, query.q, [&](Int u, Int mult) {
    weight += static_cast<double>(divisor_weight(u, query.q, query.K)) * static_cast<double>(mult);
  });
  return {query.Y / static_cast<double>(query.q) * weight, query.K == 0};
}

double nominal_box_bound(Int q, Int D, double X, double epsilon) {
  const double qd = static_cast<double>(q);
  return std::pow(qd, epsilon) * (std::sqrt(qd) + X * static_cast<double>(D) / qd + static_cast<double>(D));
}

double error_bound_box(const HyperbolaQuery& query, double epsilon) {
  require_modulus(query.q);
  return nominal_box_bound(query.q, gcd(query.K, query.q), query.X, epsilon);
}

Count count_under_curve(const CurveQuery& query) {
  validate_curve(query);
  const IntRange us = integer_points(query.U, query.X);
  Count total = 0;
  for (Int u = us.first; u <= us.last; ++u) {
    double value = 0;
    const Int top = floor_bound(query.bound, u, &value);
    if (value < 0) throw ArgumentError("curve bound is negative at u = " + std::to_string(u));
    total = checked_add(total, static_cast<Count>(count_congruent(1, top, u, query.K, query.q)));
  }
  return total;
}

MainTerm main_term_curve(const CurveQuery& query) {
  validate_curve(query);
  const IntRange us = integer_points(query.U, query.X);
  double sum = 0;
  for (Int u = us.first; u <= us.last; ++u) {
    const Int w = divisor_weight(u, query.q, query.K);
    if (w == 0) continue;
    double value = 0;
    floor_bound(query.bound, u, &value);
    sum += static_cast<double>(w) * value;
  }
  const double correction = query.X * delta_div(query.q, query.K) / 2.0;
  return {sum / static_cast<double>(query.q) - correction, query.K == 0};
}

double nominal_curve_bound(Int q, Int D, double X, double L, double epsilon) {
  const double qd = static_cast<double>(q);
  const double Dd = static_cast<double>(D);
  return std::pow(qd, epsilon) * (X * std::cbrt(1.0 / L) + std::sqrt(Dd) * std::sqrt(L) / qd + std::sqrt(qd) + Dd);
}

double error_bound_curve(const CurveQuery& query, double epsilon) {
  validate_curve(query);
  const auto* h = std::get_if<HyperbolicBound>(&query.bound);
  if (h == nullptr) throw ArgumentError("error_bound_curve: tabulated bounds have no curvature scale");
  if (h->A == 0) return std::numeric_limits<double>::infinity();
  const double u0 = std::floor(query.U) + 1.0;
  const double L = u0 * u0 * u0 / h->A;  // |f''(u)| = 2A/u^3 ~ 1/L
  return nominal_curve_bound(query.q, gcd(query.K, query.q), query.X, L, epsilon);
}

AsymptoticReport report_box(const HyperbolaQuery& query, double epsilon) {
  AsymptoticReport r;
  r.exact = count_box(query);
  r.main = main_term_box(query).value;
  r.error = to_double(r.exact) - r.main;
  r.bound = error_bound_box(query, epsilon);
  r.normalized = r.bound > 0 ? std::fabs(r.error) / r.bound : std::numeric_limits<double>::infinity();
  return r;
}

AsymptoticReport report_curve(const CurveQuery& query, double epsilon) {
  AsymptoticReport r;
  r.exact = count_under_curve(query);
  r.main = main_term_curve(query).value;
  r.error = to_double(r.exact) - r.main;
  r.bound = error_bound_curve(query, epsilon);
  r.normalized = r.bound > 0 ? std::fabs(r.error) / r.bound : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace detcount
