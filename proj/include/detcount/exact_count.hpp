#pragma once

#include <array>
#include <string>

#include "detcount/divisor_tables.hpp"
#include "detcount/types.hpp"

namespace detcount {

/// Signs of the entries a, c, d of [[a, b], [c, d]]; b is only required nonzero.
struct SignClass {
  int alpha;
  int gamma;
  int delta_prime;

  friend bool operator==(const SignClass&, const SignClass&) = default;
};

/// The eight classes in a fixed order: index = 4*(alpha<0) + 2*(gamma<0) + (delta'<0).
std::array<SignClass, 8> all_sign_classes();
int class_index(const SignClass& cls);
std::string to_string(const SignClass& cls);

/// Brute-force count of n x n integer matrices with entries in [-H, H] and
/// determinant `det`. n is 2 or 3; (2H+1)^(n^2) must not exceed 1e10.
Count naive_count(Int H, Int det, int n = 2, unsigned jobs = 0);

/// #D_2(H, det) as sum_m c2(m) c2(m - det) over the product-count support.
Count fast_count(const ProductCount& products, Int det, unsigned jobs = 0);
Count fast_count(Int H, Int det, const Budget& budget = {}, unsigned jobs = 0);

/// Matrices in D_2(H, det) with sgn a, sgn c, sgn d fixed and b != 0.
/// Enumerates (a, c, d) and solves for b; O(H^3).
Count sign_class_count(Int H, Int det, const SignClass& cls, unsigned jobs = 0);

/// Matrices in D_2(H, det) with at least one zero entry, by inclusion-exclusion
/// over the set of zero positions.
Count zero_entry_count(Int H, Int det);

struct DecompositionReport {
  Count total = 0;
  std::array<Count, 8> per_class{};
  Count zero_entry = 0;
  bool assembly_ok = false;
  /// Empty when every identity held, otherwise the first failing one.
  std::string failure;
};

/// Checks total = sum of classes + zero_entry = 4 (c_{1,1,1} + c_{1,1,-1}) + zero_entry
/// and that each class count depends only on alpha * delta'.
DecompositionReport decompose(Int H, Int det, const Budget& budget = {}, unsigned jobs = 0);

}  // namespace detcount
