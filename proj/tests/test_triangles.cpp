#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "pathpairs/exact_math.hpp"
#include "pathpairs/lattice.hpp"
#include "pathpairs/triangles.hpp"

using namespace pathpairs;

namespace {

using Rows = std::vector<std::vector<long>>;

Rows as_longs(const Triangle& t) {
  Rows out;
  for (const auto& row : t.rows) {
    out.emplace_back();
    for (const auto& v : row) out.back().push_back(v.value().get_si());
  }
  return out;
}

// Top five rows of A^{k,eps}, k = 2, 3, 4.
const std::map<std::pair<int, int>, Rows> kFigure4{
    {{2, 0}, {{1}, {2, 1}, {5, 4, 1}, {14, 14, 6, 1}, {42, 48, 27, 8, 1}}},
    {{2, 1}, {{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1}}},
    {{3, 0}, {{1}, {3, 1}, {12, 6, 1}, {55, 33, 9, 1}, {273, 182, 63, 12, 1}}},
    {{3, 1}, {{1}, {2, 1}, {7, 5, 1}, {30, 25, 8, 1}, {143, 130, 52, 11, 1}}},
    {{3, 2}, {{1}, {1, 1}, {3, 4, 1}, {12, 18, 7, 1}, {55, 88, 42, 10, 1}}},
    {{4, 0}, {{1}, {4, 1}, {22, 8, 1}, {140, 60, 12, 1}, {969, 456, 114, 16, 1}}},
    {{4, 1}, {{1}, {3, 1}, {15, 7, 1}, {91, 49, 11, 1}, {612, 357, 99, 15, 1}}},
    {{4, 2}, {{1}, {2, 1}, {9, 6, 1}, {52, 39, 10, 1}, {340, 272, 85, 14, 1}}},
    {{4, 3}, {{1}, {1, 1}, {4, 5, 1}, {22, 30, 9, 1}, {140, 200, 72, 13, 1}}},
};

}  // namespace

TEST_CASE("all three builders reproduce the published triangles") {
  for (const auto& [key, rows] : kFigure4) {
    const auto [k, eps] = key;
    INFO("k=" << k << " eps=" << eps);
    CHECK(as_longs(triangle_recursive(k, eps, 5)) == rows);
    CHECK(as_longs(triangle_closed_form(k, eps, 5)) == rows);
    CHECK(as_longs(triangle_riordan(k, eps, 5)) == rows);
  }
}

TEST_CASE("builder examples and provenance") {
  CHECK(as_longs(triangle_recursive(3, 1, 3)) == Rows{{1}, {2, 1}, {7, 5, 1}});
  CHECK(as_longs(triangle_recursive(4, 3, 2)) == Rows{{1}, {1, 1}});
  CHECK(as_longs(triangle_closed_form(2, 0, 1)) == Rows{{1}});
  for (int k = 2; k <= 5; ++k) {
    for (int eps = 0; eps < k; ++eps) CHECK(as_longs(triangle_riordan(k, eps, 1)) == Rows{{1}});
  }
  const auto t = triangle_riordan(3, 2, 4);
  CHECK(t.k == 3);
  CHECK(t.epsilon == 2);
  CHECK(t.method == TriangleMethod::riordan);
  CHECK(triangle_recursive(3, 2, 4).method == TriangleMethod::recursive);
  CHECK(triangle_closed_form(3, 2, 4).method == TriangleMethod::closed_form);
}

TEST_CASE("closed form beyond k-1 follows the brute-force oracle") {
  // row n-1 holds |P^{2,2}_{n,delta}| for delta = 1..n, counted exhaustively
  Rows expected;
  for (int n = 1; n <= 3; ++n) {
    expected.emplace_back();
    for (int delta = 1; delta <= n; ++delta) {
      expected.back().push_back(static_cast<long>(oracle::strict_pairs(2, n, delta, 2).size()));
    }
  }
  CHECK(expected == Rows{{0}, {1, 1}, {1, 2, 1}});
  CHECK(as_longs(triangle_closed_form(2, 2, 3)) == expected);

  const auto wide = triangle_closed_form(3, 5, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int n = i + 1;
      const long oracle_count =
          2 * n < 5 ? 0 : static_cast<long>(enumerate_strict(3, n, j + 1, 5).size());
      CHECK(wide.rows[i][j].value().get_si() == oracle_count);
    }
  }
}

TEST_CASE("builders that need eps <= k-1 refuse otherwise") {
  CHECK_THROWS_AS(triangle_recursive(2, 2, 3), RangeError);
  CHECK_THROWS_AS(triangle_riordan(3, 3, 3), RangeError);
  CHECK_THROWS_AS(triangle_recursive(1, 0, 3), DomainError);
  CHECK_THROWS_AS(triangle_closed_form(2, 0, 0), DomainError);
  CHECK_THROWS_AS(triangle_closed_form(2, -1, 3), DomainError);
}

TEST_CASE("three routes agree and the diagonal is 1") {
  for (int k = 2; k <= 4; ++k) {
    for (int eps = 0; eps < k; ++eps) {
      const auto r = triangle_recursive(k, eps, 10);
      const auto c = triangle_closed_form(k, eps, 10);
      const auto q = triangle_riordan(k, eps, 10);
      CHECK(r.rows == c.rows);
      CHECK(c.rows == q.rows);
      for (int i = 0; i < 10; ++i) CHECK(r.rows[i][i] == 1);
    }
  }
}

TEST_CASE("irreducible_count") {
  CHECK(irreducible_count(2, 4) == 5);
  CHECK(irreducible_count(2, 3) == 2);
  CHECK(irreducible_count(3, 2) == 2);
  CHECK_THROWS_AS(irreducible_count(1, 2), DomainError);
  CHECK_THROWS_AS(irreducible_count(2, 0), DomainError);
  // weak oracle, m = 1, away from the degenerate n = 1 cell
  for (int n = 2; n <= 6; ++n) CHECK(irreducible_count(2, n) == Nat(enumerate_weak(2, n, 0, 0, 1).size()));
  for (int n = 1; n <= 4; ++n) CHECK(irreducible_count(3, n) == Nat(enumerate_weak(3, n, 0, 0, 1).size()));
}

TEST_CASE("weak_count_formula") {
  CHECK(weak_count_formula(2, 4, 0, 0, 1) == 5);
  CHECK(weak_count_formula(2, 4, 0, 0, 3) == 3);  // the oracle sees 4 here
  CHECK(enumerate_weak(2, 4, 0, 0, 3).size() == 4);
  CHECK(weak_count_formula(2, 3, 1, 0, 0) == 5);
  CHECK(weak_count_formula(2, 3, 0, 0, 0) == 0);
  CHECK(weak_count_formula(2, 3, 2, 0, 2) == 0);  // n - delta - m < 0
  CHECK_THROWS_AS(weak_count_formula(2, 3, 0, 1, 1), RangeError);
  CHECK_THROWS_AS(weak_count_formula(2, 3, 1, 2, 1), RangeError);
  CHECK_THROWS_AS(weak_count_formula(2, 3, 1, 0, -1), DomainError);

  SUBCASE("m = 0 reduces to the strict count") {
    for (int k = 2; k <= 5; ++k) {
      for (int n = 1; n <= 10; ++n) {
        for (int delta = 1; delta <= n; ++delta) {
          for (int eps = 0; eps <= (k - 1) * delta; ++eps) {
            CHECK(weak_count_formula(k, n, delta, eps, 0) == strict_count_formula({k, n, delta, eps}));
          }
        }
      }
    }
  }
  SUBCASE("returns over closed pairs sum to C^k_n") {
    for (int k = 2; k <= 4; ++k) {
      for (int n = 1; n <= 20; ++n) {
        Nat sum;
        for (int m = 1; m <= n; ++m) sum += weak_count_formula(k, n, 0, 0, m);
        CHECK(sum == raney_coefficient(k, 1, n));
      }
    }
  }
}
