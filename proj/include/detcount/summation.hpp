#pragma once

#include <cmath>

#include "detcount/types.hpp"

namespace detcount {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

/// exact vs main, with |error| measured against an O(.)-term envelope taken
/// with implied constant 1. Callers compare `ratio` to their own constant.
struct LemmaReport {
  double exact = 0;
  double main = 0;
  double error = 0;
  double envelope = 0;
  double ratio = 0;
};

LemmaReport make_report(double exact, double main, double envelope);

/// sum_{c <= K} c^A gcd(c, L)^B, B <= 1.
double gcd_power_sum(Int K, Int L, double A, double B);
/// Upper-bound report: main 0, envelope K^(A+1+eps) L^eps.
LemmaReport gcd_power_report(Int K, Int L, double A, double B, double epsilon = 0.05);

/// sum_{n <= X} phi(n)/n and sum_{n <= X} phi(n)/n^2.
double phi_ratio_sum(Int X);
double phi_over_square_sum(Int X);
/// Against (6/pi^2) X with envelope log X, and (6/pi^2) log X with envelope 1.
LemmaReport phi_ratio_report(Int X);
LemmaReport phi_over_square_report(Int X);

/// #{0 < x <= X : gcd(x, Y) = 1}.
Count coprime_count(double X, Int Y);

/// Sums over pairs with gcd(x, y) = r:
///   1: r/(xy) over 0 < x, y <= X
///   2: r/x over 0 < x <= X, 0 < y < x + Y
///   3: r/y over 0 < x <= X, x + Y < y <= X   (needs 0 < Y <= X)
///   4: r/y over 0 < x <= X, 0 < y <= Y       (needs Y >= r)
/// All need 1 <= r <= X. Logarithms in envelopes are floored at 1.
double xy_sum_exact(int variant, double X, double Y, Int r);
double xy_sum_main(int variant, double X, double Y, Int r);
double xy_sum_envelope(int variant, double X, double Y, Int r);
LemmaReport xy_sum(int variant, double X, double Y, Int r);

/// partial = sum_{r | delta, r <= H} 1/r, full = sigma(delta)/delta.
struct DivisorTail {
  double partial = 0;
  double full = 0;
};
DivisorTail divisor_tail(Int delta, Int H);

/// 0 <= full - partial <= tau(delta)/H, decided in integers.
bool divisor_tail_bound_holds(Int delta, Int H);

}  // namespace detcount
