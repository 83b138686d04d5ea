#include "detcount/summation.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "detcount/arith.hpp"

namespace detcount {

namespace {

constexpr double kSixOverPiSq = 6.0 / (std::numbers::pi * std::numbers::pi);

// Shared sieve, grown on demand and never shrunk.
std::shared_ptr<const MultiplicativeTables> tables_up_to(Int limit) {
  static std::mutex mutex;
  static std::shared_ptr<const MultiplicativeTables> cached;
  std::lock_guard<std::mutex> lock(mutex);
  if (!cached || cached->limit() < limit) {
    const Int grown = std::max<Int>({limit, 1024, cached ? 2 * cached->limit() : 0});
    cached = std::make_shared<const MultiplicativeTables>(grown);
  }
  return cached;
}

double log_at_least_one(double t) { return t > std::numbers::e ? std::log(t) : 1.0; }

Int floor_nonneg(double x) { return x <= 0 ? 0 : static_cast<Int>(std::floor(x)); }

// sum_{d | n} mu(d) floor(z / d) for z >= 0.
Int coprime_upto(const MultiplicativeTables& t, Int z, Int n) {
  if (z <= 0) return 0;
  Int s = 0;
  for (const auto& sd : squarefree_divisors(t, n)) s += sd.mu * (z / sd.d);
  return s;
}

void check_xy_args(int variant, double X, double Y, Int r) {
  if (variant < 1 || variant > 4) throw ArgumentError("xy_sum: variant must be 1..4");
  if (r < 1) throw ArgumentError("xy_sum: r must be >= 1");
  if (!(X >= static_cast<double>(r))) throw ArgumentError("xy_sum: need r <= X");
  if (variant == 2 && Y < 0) throw ArgumentError("xy_sum variant 2: need Y >= 0");
  if (variant == 3 && !(Y > 0 && Y <= X)) throw ArgumentError("xy_sum variant 3: need 0 < Y <= X");
  if (variant == 4 && !(Y >= static_cast<double>(r))) throw ArgumentError("xy_sum variant 4: need Y >= r");
}

}  // namespace

LemmaReport make_report(double exact, double main, double envelope) {
  LemmaReport rep{exact, main, exact - main, envelope, 0};
  if (envelope > 0)
    rep.ratio = std::fabs(rep.error) / envelope;
  else
    rep.ratio = rep.error == 0 ? 0 : std::numeric_limits<double>::infinity();
  return rep;
}

double gcd_power_sum(Int K, Int L, double A, double B) {
  if (K < 1 || L < 1) throw ArgumentError("gcd_power_sum: K and L must be >= 1");
  if (B > 1) throw ArgumentError("gcd_power_sum: B must be <= 1");
  CompensatedSum s;
  for (Int c = 1; c <= K; ++c)
    s.add(std::pow(static_cast<double>(c), A) * std::pow(static_cast<double>(gcd(c, L)), B));
  return s.value();
}

LemmaReport gcd_power_report(Int K, Int L, double A, double B, double epsilon) {
  const double exact = gcd_power_sum(K, L, A, B);
  const double env = std::pow(static_cast<double>(K), A + 1 + epsilon) * std::pow(static_cast<double>(L), epsilon);
  return make_report(exact, 0.0, env);
}

double phi_ratio_sum(Int X) {
  if (X < 1) throw ArgumentError("phi_ratio_sum: X must be >= 1");
  const auto t = tables_up_to(X);
  CompensatedSum s;
  for (Int n = 1; n <= X; ++n) s.add(static_cast<double>(t->phi(n)) / static_cast<double>(n));
  return s.value();
}

double phi_over_square_sum(Int X) {
  if (X < 1) throw ArgumentError("phi_over_square_sum: X must be >= 1");
  const auto t = tables_up_to(X);
  CompensatedSum s;
  for (Int n = 1; n <= X; ++n) {
    const double nd = static_cast<double>(n);
    s.add(static_cast<double>(t->phi(n)) / nd / nd);
  }
  return s.value();
}

LemmaReport phi_ratio_report(Int X) {
  const double x = static_cast<double>(X);
  return make_report(phi_ratio_sum(X), kSixOverPiSq * x, log_at_least_one(x));
}

LemmaReport phi_over_square_report(Int X) {
  const double x = static_cast<double>(X);
  return make_report(phi_over_square_sum(X), kSixOverPiSq * std::log(x), 1.0);
}

Count coprime_count(double X, Int Y) {
  if (Y < 1) throw ArgumentError("coprime_count: Y must be >= 1");
  const Int z = floor_nonneg(X);
  if (z == 0) return 0;
  // sum over squarefree d | Y of mu(d) floor(z/d)
  const auto pf = factorize(Y);
  Int total = 0;
  const std::size_t k = pf.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Int d = 1;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        d *= pf[i].prime;
        sign = -sign;
      }
    total += sign * (z / d);
  }
  return static_cast<Count>(total);
}

double xy_sum_exact(int variant, double X, double Y, Int r) {
  check_xy_args(variant, X, Y, r);
  // x = r x', y = r y' with gcd(x', y') = 1; every term r/x, r/y, r/(xy)
  // becomes 1/x', 1/y', (1/r)/(x'y').
  const Int Xp = floor_nonneg(X) / r;
  CompensatedSum s;
  switch (variant) {
    case 1: {
      // (1/r) sum_d mu(d)/d^2 H(X'/d)^2
      const auto t = tables_up_to(Xp);
      std::vector<double> harmonic(static_cast<std::size_t>(Xp) + 1, 0.0);
      CompensatedSum h;
      for (Int n = 1; n <= Xp; ++n) {
        h.add(1.0 / static_cast<double>(n));
        harmonic[static_cast<std::size_t>(n)] = h.value();
      }
      for (Int d = 1; d <= Xp; ++d) {
        if (t->mu(d) == 0) continue;
        const double hd = harmonic[static_cast<std::size_t>(Xp / d)];
        const double dd = static_cast<double>(d);
        s.add(t->mu(d) * hd * hd / (dd * dd));
      }
      return s.value() / static_cast<double>(r);
    }
    case 2: {
      // y' < x' + Y/r  <=>  y' <= x' + ceil(Y/r) - 1
      const Int shift = static_cast<Int>(std::ceil(Y / static_cast<double>(r))) - 1;
      const auto t = tables_up_to(Xp);
      for (Int x = 1; x <= Xp; ++x)
        s.add(static_cast<double>(coprime_upto(*t, x + shift, x)) / static_cast<double>(x));
      return s.value();
    }
    case 3: {
      // x' < y' - Y/r  <=>  x' <= y' - floor(Y/r) - 1
      const Int shift = floor_nonneg(Y / static_cast<double>(r)) + 1;
      const auto t = tables_up_to(Xp);
      for (Int y = shift + 1; y <= Xp; ++y)
        s.add(static_cast<double>(coprime_upto(*t, y - shift, y)) / static_cast<double>(y));
      return s.value();
    }
    default: {
      const Int Yp = floor_nonneg(Y) / r;
      const auto t = tables_up_to(Yp);
      for (Int y = 1; y <= Yp; ++y)
        s.add(static_cast<double>(coprime_upto(*t, Xp, y)) / static_cast<double>(y));
      return s.value();
    }
  }
}

double xy_sum_main(int variant, double X, double Y, Int r) {
  check_xy_args(variant, X, Y, r);
  const double rd = static_cast<double>(r);
  const double lx = std::log(X / rd);
  switch (variant) {
    case 1: return kSixOverPiSq * lx * lx / rd;
    case 2: return kSixOverPiSq * (X / rd + Y / rd * lx);
    case 3: return kSixOverPiSq * ((X - Y) / rd + Y / rd * std::log(X / Y));
    default: return kSixOverPiSq * X / rd * std::log(Y / rd);
  }
}

double xy_sum_envelope(int variant, double X, double Y, Int r) {
  check_xy_args(variant, X, Y, r);
  const double rd = static_cast<double>(r);
  const double lx = log_at_least_one(X / rd);
  switch (variant) {
    case 1: return lx / rd;
    case 2:
    case 3: return Y / rd + lx * lx;
    default: return X / rd;
  }
}

LemmaReport xy_sum(int variant, double X, double Y, Int r) {
  return make_report(xy_sum_exact(variant, X, Y, r), xy_sum_main(variant, X, Y, r),
                     xy_sum_envelope(variant, X, Y, r));
}

DivisorTail divisor_tail(Int delta, Int H) {
  if (delta < 1 || H < 1) throw ArgumentError("divisor_tail: delta and H must be >= 1");
  CompensatedSum partial;
  for (Int r : divisors(delta))
    if (r <= H) partial.add(1.0 / static_cast<double>(r));
  return {partial.value(), static_cast<double>(sigma(delta)) / static_cast<double>(delta)};
}

bool divisor_tail_bound_holds(Int delta, Int H) {
  if (delta < 1 || H < 1) throw ArgumentError("divisor_tail_bound_holds: delta and H must be >= 1");
  // full - partial = sum_{r | delta, r > H} 1/r; scaled by H*delta it is an integer.
  Wide scaled = 0;
  for (Int r : divisors(delta))
    if (r > H) scaled += static_cast<Wide>(H) * (delta / r);
  return scaled >= 0 && scaled <= static_cast<Wide>(tau(delta)) * delta;
}

}  // namespace detcount
