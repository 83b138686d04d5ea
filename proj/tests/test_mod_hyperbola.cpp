#include <doctest.h>

#include <cmath>

#include "detcount/arith.hpp"
#include "detcount/diagnostics.hpp"
#include "detcount/mod_hyperbola.hpp"
#include "detcount/rng.hpp"
#include "oracles.hpp"

using namespace detcount;

namespace {

HyperbolaQuery box_query(Int K, Int q, Int U, Int V, Int X, Int Y) {
  return {K, q, double(U), double(V), double(X), double(Y)};
}

CurveQuery curve_query(Int K, Int q, Int U, Int X, double A) { return {K, q, double(U), double(X), HyperbolicBound{A}}; }

}  // namespace

TEST_SUITE("mod_hyperbola") {
  TEST_CASE("box examples") {
    CHECK(count_box(box_query(0, 1, 0, 0, 3, 3)) == 9);
    CHECK(count_box(box_query(1, 2, 0, 0, 4, 4)) == 4);
    CHECK(count_box(box_query(2, 4, 0, 0, 4, 4)) == 4);
    CHECK(main_term_box(box_query(1, 1, 0, 0, 5, 7)).value == doctest::Approx(35));
    CHECK(main_term_box(box_query(6, 4, 0, 0, 4, 4)).value == doctest::Approx(4));
    CHECK(main_term_box(box_query(0, 4, 0, 0, 4, 4)).convention);
    CHECK_FALSE(main_term_box(box_query(3, 4, 0, 0, 4, 4)).convention);
    CHECK(error_bound_box(box_query(1, 100, 0, 0, 1000, 1), 0) == doctest::Approx(21));
    CHECK(error_bound_box(box_query(7, 1, 0, 0, 50, 1), 0) == doctest::Approx(52));
  }

  TEST_CASE("box equals enumeration") {
    SplitMix64 rng(77);
    for (int i = 0; i < 400; ++i) {
      const Int q = rng.uniform(1, 40), K = rng.uniform(-300, 300);
      const Int U = rng.uniform(-30, 60), V = rng.uniform(-30, 60), X = rng.uniform(0, 90), Y = rng.uniform(0, 90);
      REQUIRE(count_box(box_query(K, q, U, V, X, Y)) == static_cast<Count>(oracle::box(K, q, U, V, X, Y)));
    }
  }

  TEST_CASE("real endpoints only see integer points") {
    HyperbolaQuery q{3, 7, 0.5, 1.25, 10.0, 6.5};
    CHECK(count_box(q) == static_cast<Count>(oracle::box(3, 7, 0, 1, 10, 6)));
    CHECK(integer_points(0.5, 10).first == 1);
    CHECK(integer_points(0.5, 10).last == 10);
    CHECK(integer_points(2, 0).size() == 0);
    CHECK_THROWS_AS(integer_points(0, -1), ArgumentError);
  }

  TEST_CASE("box additivity under splits") {
    SplitMix64 rng(8);
    for (int i = 0; i < 200; ++i) {
      const Int q = rng.uniform(1, 300), K = rng.uniform(-5000, 5000);
      const Int U = rng.uniform(0, 500), V = rng.uniform(0, 500), X = rng.uniform(0, 900), Y = rng.uniform(0, 900);
      const Int xs = rng.uniform(0, X), ys = rng.uniform(0, Y);
      const Count whole = count_box(box_query(K, q, U, V, X, Y));
      CHECK(whole == count_box(box_query(K, q, U, V, xs, Y)) + count_box(box_query(K, q, U + xs, V, X - xs, Y)));
      CHECK(whole == count_box(box_query(K, q, U, V, X, ys)) + count_box(box_query(K, q, U, V + ys, X, Y - ys)));
    }
  }

  TEST_CASE("a full period in v counts residues exactly") {
    // With Y = q each u contributes #{v mod q : uv == K}, which is gcd(u, q)
    // when gcd(u, q) | K and 0 otherwise; the main term is then exact.
    for (Int q = 1; q <= 50; ++q)
      for (Int K : {0, 1, 6, 12, -10, 35}) {
        const auto query = box_query(K, q, 3, 11, 2 * q + 5, q);
        Int expected = 0;
        for (Int u = 4; u <= 3 + 2 * q + 5; ++u) {
          const Int g = oracle::gcd(u, q);
          if (oracle::mod(K, g) == 0) expected += g;
        }
        CHECK(count_box(query) == static_cast<Count>(expected));
        CHECK(main_term_box(query).value == doctest::Approx(double(expected)));
      }
  }

  TEST_CASE("curve examples") {
    CHECK(count_under_curve(curve_query(0, 1, 0, 3, 3)) == 5);
    CHECK(count_under_curve(curve_query(1, 2, 0, 3, 0)) == 0);
    CHECK(count_under_curve(curve_query(1, 2, 0, 3, 3)) == 3);
    CHECK(main_term_curve(curve_query(1, 1, 0, 3, 3)).value == doctest::Approx(4.0));
    CHECK(main_term_curve(curve_query(1, 2, 0, 3, 0)).value == doctest::Approx(0.0));
    CHECK(nominal_curve_bound(1, 1, 10, 1000, 0) == doctest::Approx(1 + std::sqrt(1000.0) + 1 + 1));
    CHECK(nominal_curve_bound(1, 1, 10, 1e18, 0) - nominal_curve_bound(1, 1, 0, 1e18, 0) == doctest::Approx(1e-5));
    CHECK(std::isinf(error_bound_curve(curve_query(1, 2, 0, 3, 0), 0.1)));
    CHECK_THROWS_AS(count_under_curve(curve_query(1, 2, -1, 3, 3)), ArgumentError);
    CHECK_THROWS_AS(count_under_curve(curve_query(1, 2, 0, 3, -1)), ArgumentError);
  }

  TEST_CASE("curve equals enumeration") {
    SplitMix64 rng(19);
    for (int i = 0; i < 400; ++i) {
      const Int q = rng.uniform(1, 40), K = rng.uniform(-300, 300);
      const Int U = rng.uniform(0, 60), X = rng.uniform(0, 60), A = rng.uniform(0, 3000);
      REQUIRE(count_under_curve(curve_query(K, q, U, X, double(A))) ==
              static_cast<Count>(oracle::under_hyperbola(K, q, U, X, A)));
    }
  }

  TEST_CASE("tabulated bound") {
    CurveQuery q{2, 5, 0, 4, TabulatedBound{1, {3.5, 7.0, 0.2, 10.9}}};
    Int expected = 0;
    const Int tops[] = {3, 7, 0, 10};
    for (Int u = 1; u <= 4; ++u)
      for (Int v = 1; v <= tops[u - 1]; ++v) expected += oracle::mod(u * v - 2, 5) == 0;
    CHECK(count_under_curve(q) == static_cast<Count>(expected));
    CHECK_THROWS_AS(error_bound_curve(q, 0.1), ArgumentError);
    CurveQuery short_table{2, 5, 0, 6, TabulatedBound{1, {1, 2}}};
    CHECK_THROWS_AS(count_under_curve(short_table), ArgumentError);
  }

  TEST_CASE("band between two curves") {
    SplitMix64 rng(23);
    for (int i = 0; i < 200; ++i) {
      const Int q = rng.uniform(1, 60), K = rng.uniform(-500, 500);
      const Int U = rng.uniform(0, 80), X = rng.uniform(1, 80);
      const Int lo = rng.uniform(0, 4000), hi = lo + rng.uniform(0, 4000);
      Int band = 0;
      for (Int u = U + 1; u <= U + X; ++u)
        for (Int v = lo / u + 1; v <= hi / u; ++v) band += oracle::mod(u * v - K, q) == 0;
      CHECK(count_under_curve(curve_query(K, q, U, X, double(hi))) -
                count_under_curve(curve_query(K, q, U, X, double(lo))) ==
            static_cast<Count>(band));
    }
  }

  TEST_CASE("seeded query sets are reproducible and in range") {
    const auto a = random_box_queries(5, 100), b = random_box_queries(5, 100), c = random_box_queries(6, 100);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].K == b[i].K);
      CHECK(a[i].X == b[i].X);
      differs = differs || a[i].K != c[i].K;
      CHECK(a[i].q >= 1);
      CHECK(a[i].q <= 500);
      CHECK(std::abs(a[i].K) >= 1);
      CHECK(std::abs(a[i].K) <= 10000);
      CHECK(a[i].X <= 2000);
      CHECK(a[i].Y <= 2000);
    }
    CHECK(differs);
    for (const auto& q : random_curve_queries(5, 100)) {
      const double A = std::get<HyperbolicBound>(q.bound).A;
      CHECK(A >= 1);
      CHECK(A <= 2000 * (q.U + 1));
    }
  }

  TEST_CASE("diagnostic reports are consistent") {
    const auto s = run_box_diagnostics(random_box_queries(9, 50), 0.25, 2);
    for (const auto& r : s.reports) {
      CHECK(r.error == doctest::Approx(to_double(r.exact) - r.main));
      CHECK(r.normalized <= s.max_normalized);
    }
    CHECK(s.reports[s.argmax].normalized == s.max_normalized);
  }
}
