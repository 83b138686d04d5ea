#include "detcount/divisor_tables.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <ostream>

#include "detcount/parallel.hpp"

namespace detcount {

namespace {

void check_budget(Int N, const Budget& budget, const char* what) {
  if (N <= 0) throw ArgumentError(std::string(what) + ": N must be positive");
  const Wide cells = static_cast<Wide>(N) * N + 1;
  if (cells > static_cast<Wide>(budget.max_cells))
    throw BudgetError(std::string(what) + ": N^2 = " + to_string(cells - 1) + " cells exceeds budget of " +
                      std::to_string(budget.max_cells));
}

Count power(std::uint32_t base, int k) {
  Count r = 1;
  for (int i = 0; i < k; ++i) r = checked_mul(r, static_cast<Count>(base));
  return r;
}

constexpr std::array<char, 4> kMagic{'T', 'A', 'U', 'N'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put_le(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>((value >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) throw ArgumentError("TauTable::load: truncated input");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

}  // namespace

TauTable::TauTable(Int N, const Budget& budget) : N_(N) {
  check_budget(N, budget, "TauTable");
  counts_.assign(static_cast<std::size_t>(N * N + 1), 0);
  for (Int a = 1; a <= N; ++a) {
    std::uint32_t* row = counts_.data();
    for (Int n = a; n <= a * N; n += a) ++row[n];
  }
}

std::uint32_t TauTable::operator()(Int n) const {
  if (n <= 0) throw ArgumentError("tau_N: n must be positive");
  return n > support() ? 0 : at(n);
}

void TauTable::save(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint64_t>(out, static_cast<std::uint64_t>(N_));
  for (std::size_t i = 1; i < counts_.size(); ++i) put_le<std::uint32_t>(out, counts_[i]);
}

TauTable TauTable::load(std::istream& in, const Budget& budget) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw ArgumentError("TauTable::load: bad magic");
  if (get_le<std::uint32_t>(in) != kVersion) throw ArgumentError("TauTable::load: unsupported version");
  const auto N = static_cast<Int>(get_le<std::uint64_t>(in));
  check_budget(N, budget, "TauTable::load");
  TauTable t;
  t.N_ = N;
  t.counts_.assign(static_cast<std::size_t>(N * N + 1), 0);
  for (Int n = 1; n <= N * N; ++n) t.counts_[static_cast<std::size_t>(n)] = get_le<std::uint32_t>(in);
  return t;
}

Int tau_restricted_window(Int N, Int n) {
  if (N <= 0 || n <= 0) throw ArgumentError("tau_restricted_window: N and n must be positive");
  // d | n with n/N <= d <= N, i.e. n <= d*N.
  Int count = 0;
  for (Int d = 1; d <= N && d <= n; ++d)
    if (n % d == 0 && static_cast<Wide>(d) * N >= n) ++count;
  return count;
}

Count tau_restricted(const TauTable& table, Int n) { return table(n); }

Count tau_moment(const TauTable& table, int k, unsigned jobs) {
  if (k < 1) throw ArgumentError("tau_moment: k must be >= 1");
  const auto blocks = split_range(1, table.support(), 64);
  const auto partial = parallel_map<Count>(blocks.size(), jobs, [&](std::size_t b) {
    Count s = 0;
    if (k == 1 || k == 2) {
      std::uint64_t acc = 0;
      for (Int n = blocks[b].lo; n <= blocks[b].hi; ++n) {
        const std::uint64_t t = table.at(n);
        acc += k == 1 ? t : t * t;
      }
      s = acc;
    } else {
      for (Int n = blocks[b].lo; n <= blocks[b].hi; ++n) s = checked_add(s, power(table.at(n), k));
    }
    return s;
  });
  Count total = 0;
  for (Count p : partial) total = checked_add(total, p);
  return total;
}

Count tau_moment(Int N, int k, const Budget& budget, unsigned jobs) {
  return tau_moment(TauTable(N, budget), k, jobs);
}

Count shifted_sum(const TauTable& table, Int shift, unsigned jobs) {
  if (shift < 1) throw ArgumentError("shifted_sum: shift must be >= 1");
  const Int last = table.support() - shift;  // n + shift <= N^2
  if (last < 1) return 0;
  const auto blocks = split_range(1, last, 64);
  const auto partial = parallel_map<std::uint64_t>(blocks.size(), jobs, [&](std::size_t b) {
    std::uint64_t acc = 0;
    for (Int n = blocks[b].lo; n <= blocks[b].hi; ++n)
      acc += static_cast<std::uint64_t>(table.at(n)) * table.at(n + shift);
    return acc;
  });
  Count total = 0;
  for (auto p : partial) total = checked_add(total, p);
  return total;
}

Count shifted_sum(Int N, Int shift, const Budget& budget, unsigned jobs) {
  return shifted_sum(TauTable(N, budget), shift, jobs);
}

std::vector<std::uint32_t> tau_block(Int N, Int lo, Int hi) {
  if (N <= 0 || lo < 1) throw ArgumentError("tau_block: N and lo must be positive");
  if (hi < lo) return {};
  std::vector<std::uint32_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (Int a = 1; a <= N; ++a) {
    const Int b_lo = std::max<Int>(1, static_cast<Int>(ceil_div(lo, a)));
    const Int b_hi = std::min<Int>(N, hi / a);
    for (Int b = b_lo; b <= b_hi; ++b) ++out[static_cast<std::size_t>(a * b - lo)];
  }
  return out;
}

Count tau_moment_streaming(Int N, int k, Int block) {
  if (k < 1) throw ArgumentError("tau_moment_streaming: k must be >= 1");
  if (N <= 0 || block <= 0) throw ArgumentError("tau_moment_streaming: N and block must be positive");
  const Int support = N * N;
  Count total = 0;
  for (Int lo = 1; lo <= support; lo += block) {
    const Int hi = std::min(support, lo + block - 1);
    for (std::uint32_t t : tau_block(N, lo, hi)) total = checked_add(total, power(t, k));
  }
  return total;
}

Count shifted_sum_streaming(Int N, Int shift, Int block) {
  if (shift < 1) throw ArgumentError("shifted_sum_streaming: shift must be >= 1");
  if (N <= 0 || block <= 0) throw ArgumentError("shifted_sum_streaming: N and block must be positive");
  const Int last = N * N - shift;
  Count total = 0;
  for (Int lo = 1; lo <= last; lo += block) {
    const Int hi = std::min(last, lo + block - 1);
    const auto here = tau_block(N, lo, hi);
    const auto there = tau_block(N, lo + shift, hi + shift);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < here.size(); ++i) acc += static_cast<std::uint64_t>(here[i]) * there[i];
    total = checked_add(total, acc);
  }
  return total;
}

ProductCount::ProductCount(Int H, const Budget& budget) : table_(H, budget) {}

Count ProductCount::operator()(Int m) const {
  const Int H = table_.N();
  if (m == 0) return static_cast<Count>(4 * H + 1);
  const Int a = m < 0 ? -m : m;
  if (a > table_.support()) return 0;
  return 2 * static_cast<Count>(table_.at(a));
}

}  // namespace detcount
