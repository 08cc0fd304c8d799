#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pathpairs/exact_math.hpp"
#include "pathpairs/formats.hpp"
#include "pathpairs/series.hpp"

using namespace pathpairs;

namespace {

std::vector<long> as_longs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

std::vector<std::vector<long>> as_longs(const Triangle& t) {
  std::vector<std::vector<long>> out;
  for (const auto& row : t.rows) {
    out.emplace_back();
    for (const auto& v : row) out.back().push_back(v.value().get_si());
  }
  return out;
}

using Rows = std::vector<std::vector<long>>;
const Rows kFigure2{{1}, {2, 1}, {5, 4, 1}, {14, 14, 6, 1}, {42, 48, 27, 8, 1}};

}  // namespace

TEST_CASE("series arithmetic truncates to the smaller order") {
  const TruncatedSeries a{1, 2, 3, 4};
  const TruncatedSeries b{1, 1};
  CHECK((a * b).order() == 1);
  CHECK(as_longs(a + b) == std::vector<long>{2, 3});
  CHECK(as_longs(a - a) == std::vector<long>{0, 0, 0, 0});
  CHECK(as_longs(a.shifted()) == std::vector<long>{0, 1, 2, 3});
  CHECK(as_longs(b.padded(3)) == std::vector<long>{1, 1, 0, 0});
  CHECK(as_longs(a.truncated(1)) == std::vector<long>{1, 2});
  CHECK_THROWS_AS(TruncatedSeries(-1), DomainError);
}

TEST_CASE("series_power") {
  CHECK(as_longs(series_power(TruncatedSeries{1, 1, 0, 0}, 2)) == std::vector<long>{1, 2, 1, 0});
  CHECK(as_longs(series_power(kcatalan_series(2, 2), 2)) == std::vector<long>{1, 2, 5});
  CHECK(as_longs(series_power(TruncatedSeries{3, 7, -2}, 0)) == std::vector<long>{1, 0, 0});
  CHECK_THROWS_AS(series_power(TruncatedSeries{1, 1}, -1), DomainError);

  // repeated squaring vs naive repeated multiplication, signed coefficients
  const TruncatedSeries s{2, -3, 1, 5, -1, 0, 4, 1, -2};
  const oracle::Poly p(s.coeffs().begin(), s.coeffs().end());
  for (int e = 0; e <= 11; ++e) {
    const auto expected = oracle::naive_power(p, e, s.order());
    CHECK(series_power(s, e).coeffs() == expected);
  }
}

TEST_CASE("kcatalan_series") {
  CHECK(as_longs(kcatalan_series(2, 5)) == std::vector<long>{1, 1, 2, 5, 14, 42});
  CHECK(as_longs(kcatalan_series(3, 5)) == std::vector<long>{1, 1, 3, 12, 55, 273});
  for (int k = 2; k <= 6; ++k) CHECK(as_longs(kcatalan_series(k, 0)) == std::vector<long>{1});
  CHECK_THROWS_AS(kcatalan_series(1, 3), DomainError);

  for (int k = 2; k <= 5; ++k) {
    const auto c = kcatalan_series(k, 24);
    CHECK(c.coeffs() == oracle::kcatalan_by_convolution(k, 24));
    TruncatedSeries residual = series_power(c, k).shifted() - c;
    residual[0] += 1;
    CHECK(residual.is_zero());
    for (int n = 0; n <= 24; ++n) CHECK(c[n] == raney_coefficient(k, 1, n).value());
    // truncation stability
    CHECK(kcatalan_series(k, 30).truncated(24) == c);
  }
}

TEST_CASE("compose") {
  // (1+t)^2 evaluated at t/(1) = t: identity substitution
  const TruncatedSeries outer{1, 2, 1, 0, 0};
  CHECK(compose(outer, TruncatedSeries::variable(4)) == outer);
  CHECK_THROWS_AS(compose(outer, TruncatedSeries{1, 1, 0, 0, 0}), DomainError);
  // 1/(1-t) at t+t^2 = sum (t + t^2)^i: Fibonacci numbers
  const TruncatedSeries geom{1, 1, 1, 1, 1, 1, 1};
  CHECK(as_longs(compose(geom, TruncatedSeries{0, 1, 1, 0, 0, 0, 0})) ==
        std::vector<long>{1, 1, 2, 3, 5, 8, 13});
}

TEST_CASE("riordan_triangle") {
  const auto c2 = kcatalan_series(2, 4);
  CHECK(as_longs(riordan_triangle({series_power(c2, 2), series_power(c2, 2).shifted()}, 5)) == kFigure2);

  const auto c3 = kcatalan_series(3, 4);
  CHECK(as_longs(riordan_triangle({series_power(c3, 2), series_power(c3, 3).shifted()}, 5)) ==
        Rows{{1}, {2, 1}, {7, 5, 1}, {30, 25, 8, 1}, {143, 130, 52, 11, 1}});

  CHECK(as_longs(riordan_triangle({TruncatedSeries::one(3), TruncatedSeries::variable(3)}, 4)) ==
        Rows{{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}});

  SUBCASE("errors") {
    CHECK_THROWS_AS(riordan_triangle({TruncatedSeries{0, 1, 0}, TruncatedSeries::variable(2)}, 3), DomainError);
    CHECK_THROWS_AS(riordan_triangle({TruncatedSeries::one(2), TruncatedSeries{1, 1, 0}}, 3), DomainError);
    CHECK_THROWS_AS(riordan_triangle({TruncatedSeries::one(2), TruncatedSeries{0, 0, 1}}, 3), DomainError);
    CHECK_THROWS_AS(riordan_triangle({TruncatedSeries::one(2), TruncatedSeries::variable(2)}, 5), RangeError);
    CHECK_THROWS_AS(riordan_triangle({TruncatedSeries{1, -1, 0}, TruncatedSeries::variable(2)}, 3), DomainError);
  }
}

TEST_CASE("riordan entries equal the closed form") {
  for (int k = 2; k <= 4; ++k) {
    const auto c = kcatalan_series(k, 9);
    for (int eps = 0; eps <= k - 1; ++eps) {
      const auto tri = riordan_triangle({series_power(c, k - eps), series_power(c, k).shifted()}, 10);
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j <= i; ++j) {
          CHECK(tri.rows[i][j] == strict_count_formula(StrictQuery(k, i + 1, j + 1, eps)));
        }
      }
    }
  }
}

TEST_CASE("az_polynomials") {
  auto [a20, z20] = az_polynomials(2, 0);
  CHECK(as_longs(a20) == std::vector<long>{1, 2, 1});
  CHECK(as_longs(z20) == std::vector<long>{2, 1});
  auto [a21, z21] = az_polynomials(2, 1);
  CHECK(as_longs(a21) == std::vector<long>{1, 2, 1});
  CHECK(as_longs(z21) == std::vector<long>{1, 1});
  auto [a31, z31] = az_polynomials(3, 1);
  CHECK(as_longs(a31) == std::vector<long>{1, 3, 3, 1});
  CHECK(as_longs(z31) == std::vector<long>{2, 3, 1});
  CHECK_THROWS_AS(az_polynomials(3, 3), RangeError);
  CHECK_THROWS_AS(az_polynomials(1, 0), DomainError);

  // Z * t + (1+t)^eps == (1+t)^k, checked with the independent polynomial oracle
  for (int k = 2; k <= 6; ++k) {
    for (int eps = 0; eps < k; ++eps) {
      const auto [a, z] = az_polynomials(k, eps);
      for (int i = 0; i <= k; ++i) {
        const mpz_class zi = i == 0 ? mpz_class(0) : z[i - 1];
        CHECK(zi + oracle::pascal(eps, i) == oracle::pascal(k, i));
        CHECK(a[i] == oracle::pascal(k, i));
      }
    }
  }
}

TEST_CASE("check_az_recurrence") {
  const auto c2 = kcatalan_series(2, 4);
  const auto fig2 = riordan_triangle({series_power(c2, 2), series_power(c2, 2).shifted()}, 5);
  const auto [a, z] = az_polynomials(2, 0);
  const auto ok = check_az_recurrence(fig2, a, z);
  CHECK(ok.status == ReportStatus::pass);
  CHECK(ok.cells_checked == 14);

  const auto c3 = kcatalan_series(3, 4);
  const auto [a3, z3] = az_polynomials(3, 1);
  CHECK(check_az_recurrence(riordan_triangle({series_power(c3, 2), series_power(c3, 3).shifted()}, 5), a3, z3)
            .status == ReportStatus::pass);

  SUBCASE("an injected fault is flagged exactly where it is read") {
    Triangle bad = fig2;
    bad.rows[3][1] = bad.rows[3][1] + Nat(1);  // 14 -> 15
    const auto report = check_az_recurrence(bad, a, z);
    CHECK(report.status == ReportStatus::fail);
    std::set<std::pair<long long, long long>> cells;
    for (const auto& m : report.mismatches) cells.insert({m.coord("row"), m.coord("col")});
    // its own row-3 check, then row-4 cells whose windows include column 1:
    // col 0 (Z reads cols 0,1), col 1 (A reads 0..2), col 2 (A reads 1..3)
    CHECK(cells == std::set<std::pair<long long, long long>>{{3, 1}, {4, 0}, {4, 1}, {4, 2}});
  }
}

TEST_CASE("check_fundamental_identities") {
  for (int k = 2; k <= 4; ++k) {
    const auto c = kcatalan_series(k, 16);
    for (int eps = 0; eps < k; ++eps) {
      const auto [a, z] = az_polynomials(k, eps);
      const RiordanSpec spec{series_power(c, k - eps), series_power(c, k).shifted()};
      const auto r = check_fundamental_identities(spec, a, z, 16);
      CHECK(r.status == ReportStatus::pass);
      CHECK(r.cells_checked == 34);
    }
  }
  const auto c = kcatalan_series(2, 8);
  const RiordanSpec fig2{series_power(c, 2), series_power(c, 2).shifted()};
  const auto wrong = check_fundamental_identities(fig2, TruncatedSeries{1, 2, 1}, TruncatedSeries{2, 2}, 8);
  CHECK(wrong.status == ReportStatus::fail);
  for (const auto& m : wrong.mismatches) CHECK(m.battery == "d_times_1_minus_tZh");
  CHECK_THROWS_AS(check_fundamental_identities(fig2, TruncatedSeries{1, 2, 1}, TruncatedSeries{2, 1}, 9),
                  RangeError);
}

TEST_CASE("series JSON round-trip") {
  const auto s = series_power(kcatalan_series(4, 30), 7) - TruncatedSeries::one(30).shifted();
  const auto j = series_to_json(s);
  CHECK(j.at("order") == 30);
  CHECK(j.at("coeffs").at(0) == "1");
  CHECK(series_from_json(j) == s);
  CHECK(series_from_json(nlohmann::json::parse(j.dump())) == s);
}
