#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "detcount/types.hpp"

namespace detcount {

/// tau_N(n) = #{(a, b) : ab = n, 1 <= a, b <= N} for 1 <= n <= N^2.
///
/// Cells are 32-bit: tau_N(n) <= tau(n), which stays far below 2^31 for any
/// table that fits in memory.
class TauTable {
 public:
  /// Builds by the O(N^2) double loop over (a, b).
  explicit TauTable(Int N, const Budget& budget = {});

  Int N() const { return N_; }
  Int support() const { return N_ * N_; }

  /// tau_N(n); zero for n > N^2. Throws ArgumentError for n <= 0.
  std::uint32_t operator()(Int n) const;

  /// Unchecked lookup for 1 <= n <= N^2.
  std::uint32_t at(Int n) const { return counts_[static_cast<std::size_t>(n)]; }

  /// counts[1..N^2].
  std::span<const std::uint32_t> counts() const { return {counts_.data() + 1, counts_.size() - 1}; }

  /// Little-endian dump: "TAUN", u32 version (1), u64 N, then N^2 u32 cells.
  void save(std::ostream& out) const;
  static TauTable load(std::istream& in, const Budget& budget = {});

 private:
  TauTable() = default;

  Int N_ = 0;
  std::vector<std::uint32_t> counts_;  // index 0 unused
};

/// tau_N(n) counted through the divisor window n/N <= d <= N, d | n.
/// Independent of TauTable; used to cross-check it.
Int tau_restricted_window(Int N, Int n);

/// tau_N(n) from a table, zero outside the support. Rejects n <= 0.
Count tau_restricted(const TauTable& table, Int n);

/// Exact sum_{n <= N^2} tau_N(n)^k, k >= 1.
Count tau_moment(const TauTable& table, int k, unsigned jobs = 0);
Count tau_moment(Int N, int k, const Budget& budget = {}, unsigned jobs = 0);

/// Exact sum_{n <= N^2} tau_N(n) tau_N(n + shift), shift >= 1.
Count shifted_sum(const TauTable& table, Int shift, unsigned jobs = 0);
Count shifted_sum(Int N, Int shift, const Budget& budget = {}, unsigned jobs = 0);

/// Streaming variants: tau_N is regenerated block by block over [1, N^2],
/// so memory is O(N + block) instead of O(N^2).
Count tau_moment_streaming(Int N, int k, Int block = 1 << 20);
Count shifted_sum_streaming(Int N, Int shift, Int block = 1 << 20);

/// tau_N on the integer block [lo, hi] (lo >= 1), without a full table.
std::vector<std::uint32_t> tau_block(Int N, Int lo, Int hi);

/// c2(m) = #{(x, y) : |x|, |y| <= H, xy = m}.
///
/// Derived by enumeration (see tests): c2(0) = 4H + 1 and c2(m) = 2 tau_H(|m|)
/// for m != 0, the factor 2 counting the sign pairs (+,+)/(-,-) or (+,-)/(-,+).
class ProductCount {
 public:
  explicit ProductCount(Int H, const Budget& budget = {});

  Int H() const { return table_.N(); }
  const TauTable& table() const { return table_; }

  Count operator()(Int m) const;

  /// Unchecked variant for |m| <= H^2.
  std::uint64_t fast(Int m) const {
    if (m == 0) return static_cast<std::uint64_t>(4 * table_.N() + 1);
    return 2ull * table_.at(m < 0 ? -m : m);
  }

 private:
  TauTable table_;
};

inline ProductCount product_count(Int H, const Budget& budget = {}) { return ProductCount(H, budget); }

}  // namespace detcount
