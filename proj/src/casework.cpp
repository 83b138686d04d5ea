#include "detcount/casework.hpp"

#include <algorithm>
#include <vector>

#include "detcount/arith.hpp"
#include "detcount/mod_hyperbola.hpp"
#include "detcount/parallel.hpp"

namespace detcount {

std::string to_string(RegionG region) {
  switch (region) {
    case RegionG::SS: return "SS";
    case RegionG::SL: return "SL";
    case RegionG::LS: return "LS";
    case RegionG::LL: return "LL";
  }
  return "?";
}

std::string to_string(RegionJ region) { return region == RegionJ::SMALL_A ? "SMALL_A" : "LARGE_A"; }

RegionG region_g_from_string(const std::string& name) {
  for (RegionG r : kRegionsG)
    if (to_string(r) == name) return r;
  throw ArgumentError("unknown G region '" + name + "'");
}

RegionJ region_j_from_string(const std::string& name) {
  for (RegionJ r : kRegionsJ)
    if (to_string(r) == name) return r;
  throw ArgumentError("unknown J region '" + name + "'");
}

namespace {

void require_args(Int a, Int c, Int H, Int det, const char* what) {
  if (H < 1 || a < 1 || c < 1 || a > H || c > H || det < 1)
    throw ArgumentError(std::string(what) + ": need 1 <= a, c <= H and det >= 1");
}

void require_region_args(Int H, Int det, const char* what) {
  if (H < 1 || det < 1) throw ArgumentError(std::string(what) + ": need H >= 1 and det >= 1");
}

bool small_a(Int a, Int c, Int H, Int det) {
  return static_cast<Wide>(a) * H <= static_cast<Wide>(c) * H + det;
}

bool small_c(Int c, Int H, Int det) { return static_cast<Wide>(c) * H <= det; }

// Largest a with a*H <= c*H + det, capped at H.
Int small_a_limit(Int c, Int H, Int det) {
  return static_cast<Int>(std::min<Wide>(H, floor_div(static_cast<Wide>(c) * H + det, H)));
}

// b = 0 solutions (ad = det, 1 <= d <= H) for a in [first, last].
Int b0_solutions(Int first, Int last, Int H, Int det) {
  Int n = 0;
  for (Int a = std::max<Int>(first, 1); a <= last; ++a)
    if (det % a == 0 && det / a <= H) ++n;
  return n;
}

Count box(Int det, Int c, Int a_lo, Int a_hi, Int H) {
  if (a_hi <= a_lo) return 0;
  HyperbolaQuery q{det, c, static_cast<double>(a_lo), 0.0, static_cast<double>(a_hi - a_lo), static_cast<double>(H)};
  return count_box(q);
}

Count curve(Int det, Int c, Int a_lo, Int a_hi, Wide A) {
  if (a_hi <= a_lo || A <= 0) return 0;
  CurveQuery q{det, c, static_cast<double>(a_lo), static_cast<double>(a_hi - a_lo),
               HyperbolicBound{static_cast<double>(A)}};
  return count_under_curve(q);
}

template <typename ColumnFn>
HyperbolaRegionSum assemble_columns(Int H, ColumnFn&& column) {
  // column(c) -> {via_hyperbola, direct}
  HyperbolaRegionSum out;
  const auto cols = parallel_map<std::pair<Count, Count>>(static_cast<std::size_t>(H), 0,
                                                          [&](std::size_t i) { return column(static_cast<Int>(i) + 1); });
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out.value = checked_add(out.value, cols[i].first);
    if (cols[i].first != cols[i].second && !out.mismatch_c) out.mismatch_c = static_cast<Int>(i) + 1;
  }
  return out;
}

}  // namespace

bool in_region(RegionG region, Int a, Int c, Int H, Int det) {
  const bool sa = small_a(a, c, H, det);
  const bool sc = small_c(c, H, det);
  switch (region) {
    case RegionG::SS: return sa && sc;
    case RegionG::SL: return sa && !sc;
    case RegionG::LS: return !sa && sc;
    case RegionG::LL: return !sa && !sc;
  }
  return false;
}

bool in_region(RegionJ region, Int a, Int c, Int H, Int det) {
  return (region == RegionJ::SMALL_A) == small_a(a, c, H, det);
}

Int count_G_with_b0(Int a, Int c, Int H, Int det) {
  require_args(a, c, H, det, "count_G_with_b0");
  // -H <= b = (ad - det)/c <= H  <=>  (det - Hc)/a <= d <= (det + Hc)/a
  const Wide hc = static_cast<Wide>(H) * c;
  const Int lo = static_cast<Int>(std::max<Wide>(1, ceil_div(det - hc, a)));
  const Int hi = static_cast<Int>(std::min<Wide>(H, floor_div(det + hc, a)));
  return count_congruent(lo, hi, a, det, c);
}

Int count_G(Int a, Int c, Int H, Int det) {
  const Int with_zero = count_G_with_b0(a, c, H, det);
  // ad = det has at most one solution d; it always lies inside the d-window.
  const bool b_zero = det % a == 0 && det / a <= H;
  return with_zero - (b_zero ? 1 : 0);
}

Int count_J(Int a, Int c, Int H, Int det) {
  require_args(a, c, H, det, "count_J");
  // 0 < b = (ad - det)/c <= H  <=>  det/a < d <= (det + cH)/a
  const Int lo = static_cast<Int>(std::max<Wide>(1, floor_div(det, a) + 1));
  const Int hi = static_cast<Int>(std::min<Wide>(H, floor_div(static_cast<Wide>(det) + static_cast<Wide>(H) * c, a)));
  return count_congruent(lo, hi, a, det, c);
}

Count region_sum_G(Int H, Int det, RegionG region, unsigned jobs) {
  require_region_args(H, det, "region_sum_G");
  const auto cols = parallel_map<Count>(static_cast<std::size_t>(H), jobs, [&](std::size_t i) {
    const Int c = static_cast<Int>(i) + 1;
    Count s = 0;
    for (Int a = 1; a <= H; ++a)
      if (in_region(region, a, c, H, det)) s += static_cast<Count>(count_G(a, c, H, det));
    return s;
  });
  Count total = 0;
  for (Count s : cols) total = checked_add(total, s);
  return total;
}

Count region_sum_J(Int H, Int det, RegionJ region, unsigned jobs) {
  require_region_args(H, det, "region_sum_J");
  const auto cols = parallel_map<Count>(static_cast<std::size_t>(H), jobs, [&](std::size_t i) {
    const Int c = static_cast<Int>(i) + 1;
    Count s = 0;
    for (Int a = 1; a <= H; ++a)
      if (in_region(region, a, c, H, det)) s += static_cast<Count>(count_J(a, c, H, det));
    return s;
  });
  Count total = 0;
  for (Count s : cols) total = checked_add(total, s);
  return total;
}

HyperbolaRegionSum region_sum_G_via_hyperbola(Int H, Int det, RegionG region) {
  require_region_args(H, det, "region_sum_G_via_hyperbola");
  const bool want_small_c = region == RegionG::SS || region == RegionG::LS;
  const bool want_small_a = region == RegionG::SS || region == RegionG::SL;

  return assemble_columns(H, [&](Int c) -> std::pair<Count, Count> {
    if (small_c(c, H, det) != want_small_c) return {0, 0};
    const Int a_split = small_a_limit(c, H, det);
    const Int a_lo = want_small_a ? 0 : a_split;  // a in (a_lo, a_hi]
    const Int a_hi = want_small_a ? a_split : H;
    const Wide excess = static_cast<Wide>(det) - static_cast<Wide>(H) * c;  // det - cH, >= 0 iff c small
    const Wide upper_A = static_cast<Wide>(det) + static_cast<Wide>(H) * c;

    Count with_b0 = 0;
    if (region == RegionG::SL) {
      // d-window is all of [1, H]
      with_b0 = box(det, c, a_lo, a_hi, H);
    } else if (region == RegionG::SS) {
      // d in [(det - cH)/a, H] = [1, H] minus 0 < d < f_-(a). The strict bound
      // is the weak bound d <= (det - cH - 1)/a. For a*H <= det - cH - 1 the
      // window is empty, so those a are skipped rather than subtracted.
      const Int cut = excess >= 1 ? static_cast<Int>(std::min<Wide>(a_hi, (excess - 1) / H)) : 0;
      with_b0 = box(det, c, cut, a_hi, H) - curve(det, c, cut, a_hi, excess - 1);
    } else if (region == RegionG::LL) {
      // d in [1, f_+(a)], and f_+(a) < H here
      with_b0 = curve(det, c, a_lo, a_hi, upper_A);
    } else {
      // LS: d in [f_-(a), f_+(a)] = (0, f_+] minus (0, f_-), strict as in SS
      with_b0 = curve(det, c, a_lo, a_hi, upper_A) - curve(det, c, a_lo, a_hi, excess - 1);
    }
    const Count via = with_b0 - static_cast<Count>(b0_solutions(a_lo + 1, a_hi, H, det));

    Count direct = 0;
    for (Int a = a_lo + 1; a <= a_hi; ++a) direct += static_cast<Count>(count_G(a, c, H, det));
    return {via, direct};
  });
}

HyperbolaRegionSum region_sum_J_via_hyperbola(Int H, Int det, RegionJ region) {
  require_region_args(H, det, "region_sum_J_via_hyperbola");
  return assemble_columns(H, [&](Int c) -> std::pair<Count, Count> {
    const Int a_split = small_a_limit(c, H, det);
    const Wide upper_A = static_cast<Wide>(det) + static_cast<Wide>(H) * c;
    Int a_lo = 0, a_hi = 0;
    Count via = 0;
    if (region == RegionJ::SMALL_A) {
      // d in (det/a, H] = (0, H] minus (0, f_*(a)]; empty while a*H <= det.
      a_hi = a_split;
      const Int cut = static_cast<Int>(std::min<Int>(a_hi, det / H));
      via = box(det, c, cut, a_hi, H) - curve(det, c, cut, a_hi, det);
      a_lo = 0;
    } else {
      // d in (f_*(a), f_+(a)]; strict lower bound means b >= 1 with no correction
      a_lo = a_split;
      a_hi = H;
      via = curve(det, c, a_lo, a_hi, upper_A) - curve(det, c, a_lo, a_hi, det);
    }
    Count direct = 0;
    for (Int a = a_lo + 1; a <= a_hi; ++a) direct += static_cast<Count>(count_J(a, c, H, det));
    return {via, direct};
  });
}

}  // namespace detcount
