#include "detcount/arith.hpp"

#include <algorithm>
#include <string>

namespace detcount {

Int gcd(Int x, Int y) {
  // Unsigned magnitudes so that INT64_MIN does not overflow.
  std::uint64_t a = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
  std::uint64_t b = y < 0 ? 0 - static_cast<std::uint64_t>(y) : static_cast<std::uint64_t>(y);
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return static_cast<Int>(a);
}

namespace {

void require_positive(Int n, const char* what) {
  if (n <= 0) throw ArgumentError(std::string(what) + ": argument must be positive, got " + std::to_string(n));
}

}  // namespace

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors");
  std::vector<Int> small, large;
  for (Int d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<PrimePower> factorize(Int n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> out;
  for (Int p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

Int tau(Int n) {
  require_positive(n, "tau");
  Int t = 1;
  for (auto [p, e] : factorize(n)) t *= e + 1;
  return t;
}

Int sigma(Int n) {
  require_positive(n, "sigma");
  Int s = 1;
  for (auto [p, e] : factorize(n)) {
    Int term = 1, pk = 1;
    for (int i = 0; i < e; ++i) {
      pk = checked_mul(pk, p);
      term += pk;
    }
    s = checked_mul(s, term);
  }
  return s;
}

Int phi(Int n) {
  require_positive(n, "phi");
  Int r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

Int mobius(Int n) {
  require_positive(n, "mobius");
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

int delta_div(Int q, Int K) {
  require_positive(q, "delta_div");
  return K % q == 0 ? 1 : 0;
}

Int mod_inverse(Int a, Int m) {
  require_positive(m, "mod_inverse");
  if (m == 1) return 0;
  Wide old_r = mod_floor(a, m), r = m;
  Wide old_s = 1, s = 0;
  while (r != 0) {
    const Wide q = old_r / r;
    Wide t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw ArgumentError("mod_inverse: argument not invertible");
  return static_cast<Int>(mod_floor(old_s, m));
}

Int count_congruent(Int lo, Int hi, Int u, Int K, Int q) {
  require_positive(q, "count_congruent");
  if (hi < lo) return 0;
  const Int g = gcd(u, q);  // gcd(0, q) == q: any v works iff q | K
  if (mod_floor(K, g) != 0) return 0;
  const Int step = q / g;
  const Wide u_red = mod_floor(u / g, step);
  const Wide k_red = mod_floor(K / g, step);
  const Wide v0 = step == 1 ? 0 : mod_floor(k_red * mod_inverse(static_cast<Int>(u_red), step), step);
  return static_cast<Int>(floor_div(static_cast<Wide>(hi) - v0, step) -
                          floor_div(static_cast<Wide>(lo) - 1 - v0, step));
}

MultiplicativeTables::MultiplicativeTables(Int limit, const Budget& budget) : limit_(limit) {
  require_positive(limit, "sieve");
  // tau, sigma, phi, mu and least prime, plus two scratch arrays during construction.
  const std::uint64_t cells = 7ull * static_cast<std::uint64_t>(limit + 1);
  if (cells > budget.max_cells)
    throw BudgetError("sieve: limit " + std::to_string(limit) + " needs " + std::to_string(cells) +
                      " cells, budget is " + std::to_string(budget.max_cells));

  const auto n1 = static_cast<std::size_t>(limit + 1);
  tau_.assign(n1, 0);
  sigma_.assign(n1, 0);
  phi_.assign(n1, 0);
  mu_.assign(n1, 0);
  lp_.assign(n1, 0);
  std::vector<std::int64_t> prime_power(n1, 1);  // largest power of lp(n) dividing n
  std::vector<std::int8_t> exponent(n1, 0);
  std::vector<std::int32_t> primes;

  tau_[1] = 1;
  sigma_[1] = 1;
  phi_[1] = 1;
  mu_[1] = 1;
  lp_[1] = 1;
  for (Int n = 2; n <= limit; ++n) {
    if (lp_[n] == 0) {
      lp_[n] = static_cast<std::int32_t>(n);
      primes.push_back(static_cast<std::int32_t>(n));
    }
    for (std::int32_t p : primes) {
      if (p > lp_[n] || static_cast<Int>(p) * n > limit) break;
      lp_[static_cast<std::size_t>(p * n)] = p;
    }
    const Int p = lp_[n];
    const Int m = n / p;
    if (m > 1 && lp_[m] == p) {
      prime_power[n] = prime_power[m] * p;
      exponent[n] = static_cast<std::int8_t>(exponent[m] + 1);
    } else {
      prime_power[n] = p;
      exponent[n] = 1;
    }
    const Int pe = prime_power[n];
    const auto rest = static_cast<std::size_t>(n / pe);
    tau_[n] = tau_[rest] * (exponent[n] + 1);
    sigma_[n] = sigma_[rest] * ((pe * p - 1) / (p - 1));
    phi_[n] = phi_[rest] * (pe / p) * (p - 1);
    mu_[n] = static_cast<std::int8_t>(exponent[n] > 1 ? 0 : -mu_[rest]);
  }
}

std::size_t MultiplicativeTables::at(Int n) const {
  if (n < 1 || n > limit_)
    throw ArgumentError("MultiplicativeTables: index " + std::to_string(n) + " outside [1, " +
                        std::to_string(limit_) + "]");
  return static_cast<std::size_t>(n);
}

std::vector<SignedDivisor> squarefree_divisors(const MultiplicativeTables& tables, Int n) {
  std::vector<SignedDivisor> out{{1, 1}};
  while (n > 1) {
    const Int p = tables.least_prime(n);
    while (n % p == 0) n /= p;
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back({out[i].d * p, -out[i].mu});
  }
  return out;
}

}  // namespace detcount
