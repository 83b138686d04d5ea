#pragma once

// Brute-force reference implementations. Each one enumerates the defining
// set directly and shares no code path with the library beyond plain types.

#include <cstdint>
#include <numeric>
#include <vector>

#include "detcount/types.hpp"

namespace oracle {

using detcount::Int;

inline Int gcd(Int x, Int y) { return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y); }

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline Int phi(Int n) {
  Int k = 0;
  for (Int x = 1; x <= n; ++x)
    if (gcd(x, n) == 1) ++k;
  return k;
}

inline int mobius(Int n) {
  int sign = 1;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  return n > 1 ? -sign : sign;
}

/// #{(a, b) in [1, N]^2 : ab = n}
inline Int tau_N(Int N, Int n) {
  Int k = 0;
  for (Int a = 1; a <= N; ++a)
    if (n % a == 0 && n / a <= N) ++k;
  return k;
}

/// #{(x, y) in [-H, H]^2 : xy = m}
inline Int c2(Int H, Int m) {
  Int k = 0;
  for (Int x = -H; x <= H; ++x)
    for (Int y = -H; y <= H; ++y)
      if (x * y == m) ++k;
  return k;
}

/// #{[[a, b], [c, d]] in [-H, H]^4 : ad - bc = det}
inline Int D2(Int H, Int det) {
  Int k = 0;
  for (Int a = -H; a <= H; ++a)
    for (Int b = -H; b <= H; ++b)
      for (Int c = -H; c <= H; ++c)
        for (Int d = -H; d <= H; ++d)
          if (a * d - b * c == det) ++k;
  return k;
}

inline int sgn(Int x) { return (x > 0) - (x < 0); }

/// Matrices with sgn a, sgn c, sgn d prescribed and b != 0.
inline Int sign_class(Int H, Int det, int alpha, int gamma, int delta_prime) {
  Int k = 0;
  for (Int a = -H; a <= H; ++a)
    for (Int b = -H; b <= H; ++b)
      for (Int c = -H; c <= H; ++c)
        for (Int d = -H; d <= H; ++d)
          if (b != 0 && sgn(a) == alpha && sgn(c) == gamma && sgn(d) == delta_prime && a * d - b * c == det) ++k;
  return k;
}

inline Int zero_entry(Int H, Int det) {
  Int k = 0;
  for (Int a = -H; a <= H; ++a)
    for (Int b = -H; b <= H; ++b)
      for (Int c = -H; c <= H; ++c)
        for (Int d = -H; d <= H; ++d)
          if ((a == 0 || b == 0 || c == 0 || d == 0) && a * d - b * c == det) ++k;
  return k;
}

inline Int mod(Int x, Int q) { return ((x % q) + q) % q; }

/// Integer points U < u <= U + X, V < v <= V + Y with uv == K (mod q); integral endpoints.
inline Int box(Int K, Int q, Int U, Int V, Int X, Int Y) {
  Int k = 0;
  for (Int u = U + 1; u <= U + X; ++u)
    for (Int v = V + 1; v <= V + Y; ++v)
      if (mod(u * v - K, q) == 0) ++k;
  return k;
}

/// Points U < u <= U + X, 0 < v with u*v <= A and uv == K (mod q); U >= 0.
inline Int under_hyperbola(Int K, Int q, Int U, Int X, Int A) {
  Int k = 0;
  for (Int u = U + 1; u <= U + X; ++u)
    for (Int v = 1; u * v <= A; ++v)
      if (mod(u * v - K, q) == 0) ++k;
  return k;
}

/// #{(b, d) : ad - bc = det, 1 <= d <= H, 1 <= |b| <= H}
inline Int G(Int a, Int c, Int H, Int det) {
  Int k = 0;
  for (Int b = -H; b <= H; ++b)
    for (Int d = 1; d <= H; ++d)
      if (b != 0 && a * d - b * c == det) ++k;
  return k;
}

/// #{(b, d) : ad - bc = det, 1 <= b, d <= H}
inline Int J(Int a, Int c, Int H, Int det) {
  Int k = 0;
  for (Int b = 1; b <= H; ++b)
    for (Int d = 1; d <= H; ++d)
      if (a * d - b * c == det) ++k;
  return k;
}

/// Pair sums with gcd(x, y) = r, enumerated over the defining ranges.
inline double xy_sum(int variant, Int X, Int Y, Int r) {
  double s = 0;
  for (Int x = 1; x <= X; ++x) {
    Int y_lo = 1, y_hi = 0;
    switch (variant) {
      case 1: y_hi = X; break;
      case 2: y_hi = x + Y - 1; break;
      case 3: y_lo = x + Y + 1, y_hi = X; break;
      default: y_hi = Y; break;
    }
    for (Int y = y_lo; y <= y_hi; ++y) {
      if (gcd(x, y) != r) continue;
      const double rd = static_cast<double>(r);
      if (variant == 1) s += rd / (double(x) * double(y));
      else if (variant == 2) s += rd / double(x);
      else s += rd / double(y);
    }
  }
  return s;
}

}  // namespace oracle
