#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace detcount {

/// Plain integer role (entries, determinant, height, modulus, ...).
/// |value| < 2^63; products are widened to 128 bits before use.
using Int = std::int64_t;
using Wide = __int128;

/// Exact non-negative count. 128-bit so matrix counts never wrap.
using Count = unsigned __int128;

/// A precondition on an argument was violated.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A table or enumeration would exceed the configured memory/work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold did not. Always an implementation bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Memory budget shared by all table builders, counted in table cells.
struct Budget {
  std::uint64_t max_cells = 200'000'000;
};

inline Count checked_add(Count x, Count y) {
  Count r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("count addition overflow");
  return r;
}

inline Count checked_mul(Count x, Count y) {
  Count r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("count multiplication overflow");
  return r;
}

inline Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

std::string to_string(Count value);
std::string to_string(Wide value);

/// Lossy conversion for main-term comparisons.
inline double to_double(Count value) { return static_cast<double>(value); }

// Floor/ceil division for any signs, b != 0.
inline Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Wide ceil_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Non-negative residue of a mod m, m > 0.
inline Wide mod_floor(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detcount
