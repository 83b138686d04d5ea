#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "detcount/types.hpp"

namespace detcount {

/// Non-negative gcd; gcd(0, 0) == 0 and signs are ignored.
Int gcd(Int x, Int y);

/// Positive divisors of n in ascending order. Throws ArgumentError for n <= 0.
std::vector<Int> divisors(Int n);

/// Prime factorisation of n >= 1 as (prime, exponent) pairs, ascending.
struct PrimePower {
  Int prime;
  int exponent;
};
std::vector<PrimePower> factorize(Int n);

Int tau(Int n);
Int sigma(Int n);
Int phi(Int n);
Int mobius(Int n);

/// 1 iff q divides K; K == 0 is divisible by every q.
int delta_div(Int q, Int K);

/// Inverse of a modulo m for gcd(a, m) == 1 and m >= 1 (returns 0 when m == 1).
Int mod_inverse(Int a, Int m);

/// #{v in [lo, hi] : u*v == K (mod q)}, q >= 1. Empty range gives 0.
Int count_congruent(Int lo, Int hi, Int u, Int K, Int q);

/// tau, sigma, phi and mu for 1..limit; index 0 is unused.
/// Immutable once built and safe to share between threads.
class MultiplicativeTables {
 public:
  explicit MultiplicativeTables(Int limit, const Budget& budget = {});

  Int limit() const { return limit_; }
  std::int32_t tau(Int n) const { return tau_[at(n)]; }
  std::int64_t sigma(Int n) const { return sigma_[at(n)]; }
  std::int64_t phi(Int n) const { return phi_[at(n)]; }
  std::int8_t mu(Int n) const { return mu_[at(n)]; }

  /// Views over indices 1..limit.
  std::span<const std::int64_t> phi_table() const { return {phi_.data() + 1, phi_.size() - 1}; }
  std::span<const std::int32_t> tau_table() const { return {tau_.data() + 1, tau_.size() - 1}; }

  /// Smallest prime factor, for fast factorisation of n <= limit.
  Int least_prime(Int n) const { return lp_[at(n)]; }

 private:
  std::size_t at(Int n) const;

  Int limit_;
  std::vector<std::int32_t> tau_;
  std::vector<std::int64_t> sigma_;
  std::vector<std::int64_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int32_t> lp_;
};

inline MultiplicativeTables sieve(Int limit, const Budget& budget = {}) {
  return MultiplicativeTables(limit, budget);
}

/// Squarefree divisors of n paired with mu(d), using the table's least-prime
/// data. n must be within the table.
struct SignedDivisor {
  Int d;
  int mu;
};
std::vector<SignedDivisor> squarefree_divisors(const MultiplicativeTables& tables, Int n);

}  // namespace detcount
