#pragma once

#include <array>
#include <optional>
#include <string>

#include "detcount/types.hpp"

namespace detcount {

// Per-(a, c) solution counts of ad = det + bc with 1 <= a, c, d <= H, and the
// region sums used to assemble the positive-sign classes.
//
// Region thresholds are rational (c + det/H, det/H) and are always compared
// in integers: "a <= c + det/H" is a*H <= c*H + det, "c <= det/H" is c*H <= det.

/// Small/large a crossed with small/large c (first letter a, second letter c).
enum class RegionG { SS, SL, LS, LL };
enum class RegionJ { SMALL_A, LARGE_A };

inline constexpr std::array<RegionG, 4> kRegionsG{RegionG::SS, RegionG::SL, RegionG::LS, RegionG::LL};
inline constexpr std::array<RegionJ, 2> kRegionsJ{RegionJ::SMALL_A, RegionJ::LARGE_A};

std::string to_string(RegionG region);
std::string to_string(RegionJ region);
RegionG region_g_from_string(const std::string& name);
RegionJ region_j_from_string(const std::string& name);

bool in_region(RegionG region, Int a, Int c, Int H, Int det);
bool in_region(RegionJ region, Int a, Int c, Int H, Int det);

/// #{(b, d) : ad = det + bc, 1 <= d <= H, 1 <= |b| <= H}; det >= 1.
Int count_G(Int a, Int c, Int H, Int det);

/// As count_G but b = 0 is allowed; exceeds count_G by at most one.
Int count_G_with_b0(Int a, Int c, Int H, Int det);

/// #{(b, d) : ad = det + bc, 1 <= b, d <= H}; zero once det >= H^2.
Int count_J(Int a, Int c, Int H, Int det);

/// Direct double loop of count_G over the region's (a, c) points.
Count region_sum_G(Int H, Int det, RegionG region, unsigned jobs = 0);
Count region_sum_J(Int H, Int det, RegionJ region, unsigned jobs = 0);

/// Result of a region sum evaluated through modular-hyperbola point counts.
/// On success `mismatch_c` is empty; otherwise it holds the first c whose
/// per-column value disagreed with the direct column sum.
struct HyperbolaRegionSum {
  Count value = 0;
  std::optional<Int> mismatch_c;
};

/// For each c, counts pairs (a, d) with ad == det (mod c) in the region's
/// box or under f(a) = (det -/+ cH)/a via count_box / count_under_curve,
/// then removes the b = 0 solutions (ad = det). Each column is compared with
/// the direct column sum.
HyperbolaRegionSum region_sum_G_via_hyperbola(Int H, Int det, RegionG region);

/// Same for J, with f_*(a) = det/a and f_+(a) = (det + cH)/a.
HyperbolaRegionSum region_sum_J_via_hyperbola(Int H, Int det, RegionJ region);

}  // namespace detcount
