#include "detcount/exact_count.hpp"

#include <cmath>

#include "detcount/parallel.hpp"

namespace detcount {

std::array<SignClass, 8> all_sign_classes() {
  std::array<SignClass, 8> out{};
  for (int i = 0; i < 8; ++i) out[i] = {(i & 4) ? -1 : 1, (i & 2) ? -1 : 1, (i & 1) ? -1 : 1};
  return out;
}

int class_index(const SignClass& cls) {
  return 4 * (cls.alpha < 0) + 2 * (cls.gamma < 0) + (cls.delta_prime < 0);
}

std::string to_string(const SignClass& cls) {
  auto s = [](int v) { return v < 0 ? std::string("-1") : std::string("1"); };
  return "(" + s(cls.alpha) + "," + s(cls.gamma) + "," + s(cls.delta_prime) + ")";
}

namespace {

void require_height(Int H, const char* what) {
  if (H < 1) throw ArgumentError(std::string(what) + ": H must be >= 1");
}

Count sum_counts(const std::vector<Count>& parts) {
  Count total = 0;
  for (Count p : parts) total = checked_add(total, p);
  return total;
}

Count naive_count_2(Int H, Int det, unsigned jobs) {
  const auto rows = parallel_map<Count>(static_cast<std::size_t>(2 * H + 1), jobs, [&](std::size_t i) {
    const Int a = static_cast<Int>(i) - H;
    std::uint64_t n = 0;
    for (Int b = -H; b <= H; ++b)
      for (Int c = -H; c <= H; ++c)
        for (Int d = -H; d <= H; ++d)
          if (a * d - b * c == det) ++n;
    return static_cast<Count>(n);
  });
  return sum_counts(rows);
}

Count naive_count_3(Int H, Int det, unsigned jobs) {
  // Rows 2 and 3 fix the cofactors of row 1; row 1 is then enumerated.
  const auto parts = parallel_map<Count>(static_cast<std::size_t>(2 * H + 1), jobs, [&](std::size_t i) {
    const Int d = static_cast<Int>(i) - H;
    std::uint64_t n = 0;
    for (Int e = -H; e <= H; ++e)
      for (Int f = -H; f <= H; ++f)
        for (Int g = -H; g <= H; ++g)
          for (Int h = -H; h <= H; ++h)
            for (Int k = -H; k <= H; ++k) {
              const Int c1 = e * k - f * h;
              const Int c2 = d * k - f * g;
              const Int c3 = d * h - e * g;
              for (Int a = -H; a <= H; ++a)
                for (Int b = -H; b <= H; ++b)
                  for (Int c = -H; c <= H; ++c)
                    if (a * c1 - b * c2 + c * c3 == det) ++n;
            }
    return static_cast<Count>(n);
  });
  return sum_counts(parts);
}

// c2(m) without a table, through the divisor window.
Count product_count_pointwise(Int H, Int m) {
  if (m == 0) return static_cast<Count>(4 * H + 1);
  const Int a = m < 0 ? -m : m;
  if (static_cast<Wide>(a) > static_cast<Wide>(H) * H) return 0;
  return 2 * static_cast<Count>(tau_restricted_window(H, a));
}

}  // namespace

Count naive_count(Int H, Int det, int n, unsigned jobs) {
  require_height(H, "naive_count");
  if (n != 2 && n != 3) throw ArgumentError("naive_count: n must be 2 or 3");
  const double work = std::pow(2.0 * static_cast<double>(H) + 1.0, n * n);
  if (work > 1e10)
    throw BudgetError("naive_count: (2H+1)^(n^2) = " + std::to_string(work) + " exceeds 1e10");
  return n == 2 ? naive_count_2(H, det, jobs) : naive_count_3(H, det, jobs);
}

Count fast_count(const ProductCount& products, Int det, unsigned jobs) {
  const Int H = products.H();
  const Int sq = H * H;
  // ad = m and bc = m - det, with |m|, |m - det| <= H^2.
  const Int lo = std::max(-sq, det - sq);
  const Int hi = std::min(sq, det + sq);
  if (lo > hi) return 0;
  const auto blocks = split_range(lo, hi, 64);
  const auto parts = parallel_map<Count>(blocks.size(), jobs, [&](std::size_t b) {
    std::uint64_t acc = 0;
    for (Int m = blocks[b].lo; m <= blocks[b].hi; ++m) acc += products.fast(m) * products.fast(m - det);
    return static_cast<Count>(acc);
  });
  return sum_counts(parts);
}

Count fast_count(Int H, Int det, const Budget& budget, unsigned jobs) {
  require_height(H, "fast_count");
  // Outside [-2H^2, 2H^2] the count is zero; skip the table.
  if (static_cast<Wide>(det < 0 ? -det : det) > 2 * static_cast<Wide>(H) * H) return 0;
  return fast_count(ProductCount(H, budget), det, jobs);
}

Count sign_class_count(Int H, Int det, const SignClass& cls, unsigned jobs) {
  require_height(H, "sign_class_count");
  const auto rows = parallel_map<Count>(static_cast<std::size_t>(H), jobs, [&](std::size_t i) {
    const Int a = cls.alpha * (static_cast<Int>(i) + 1);
    std::uint64_t n = 0;
    for (Int cm = 1; cm <= H; ++cm) {
      const Int c = cls.gamma * cm;
      for (Int dm = 1; dm <= H; ++dm) {
        const Int d = cls.delta_prime * dm;
        const Wide num = static_cast<Wide>(a) * d - det;  // = bc
        if (num == 0 || num % c != 0) continue;
        const Wide b = num / c;
        if (b >= -H && b <= H) ++n;
      }
    }
    return static_cast<Count>(n);
  });
  return sum_counts(rows);
}

Count zero_entry_count(Int H, Int det) {
  require_height(H, "zero_entry_count");
  const Count w = static_cast<Count>(2 * H + 1);
  const Count pos = product_count_pointwise(H, det);   // ad = det (b or c zero)
  const Count neg = product_count_pointwise(H, -det);  // bc = -det (a or d zero)
  const Count z = det == 0 ? 1 : 0;
  // |S| = 1: four singletons; |S| = 2: {a,d}, {b,c} plus four pairs forcing det = 0;
  // |S| = 3: four triples (det = 0); |S| = 4: zero matrix.
  const Count s1 = 2 * w * (pos + neg);
  const Count s2 = pos + neg + 4 * w * w * z;
  const Count s3 = 4 * w * z;
  const Count s4 = z;
  return s1 - s2 + s3 - s4;
}

DecompositionReport decompose(Int H, Int det, const Budget& budget, unsigned jobs) {
  require_height(H, "decompose");
  DecompositionReport r;
  r.total = fast_count(H, det, budget, jobs);
  for (const auto& cls : all_sign_classes()) r.per_class[class_index(cls)] = sign_class_count(H, det, cls, jobs);
  r.zero_entry = zero_entry_count(H, det);

  Count class_sum = 0;
  for (Count c : r.per_class) class_sum = checked_add(class_sum, c);
  const Count same_sign = r.per_class[class_index({1, 1, 1})];
  const Count opposite_sign = r.per_class[class_index({1, 1, -1})];

  for (const auto& cls : all_sign_classes()) {
    const Count expected = cls.alpha == cls.delta_prime ? same_sign : opposite_sign;
    if (r.per_class[class_index(cls)] != expected && r.failure.empty())
      r.failure = "class " + to_string(cls) + " count " + to_string(r.per_class[class_index(cls)]) +
                  " differs from its representative " + to_string(expected);
  }
  if (r.failure.empty() && r.total != class_sum + r.zero_entry)
    r.failure = "total " + to_string(r.total) + " != class sum " + to_string(class_sum) + " + zero-entry " +
                to_string(r.zero_entry);
  if (r.failure.empty() && r.total != 4 * (same_sign + opposite_sign) + r.zero_entry)
    r.failure = "total " + to_string(r.total) + " != 4*(c111 + c11-1) + zero-entry";
  r.assembly_ok = r.failure.empty();
  return r;
}

}  // namespace detcount
