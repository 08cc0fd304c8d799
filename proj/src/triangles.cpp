#include "pathpairs/triangles.hpp"

#include <string>

#include "pathpairs/errors.hpp"
#include "pathpairs/exact_math.hpp"

namespace pathpairs {

namespace {

void check_shape(const char* who, int k, int epsilon, int rows) {
  const std::string name(who);
  if (k < 2) throw DomainError(name + ": k must be >= 2, got " + std::to_string(k));
  if (epsilon < 0) throw DomainError(name + ": epsilon must be >= 0, got " + std::to_string(epsilon));
  if (rows < 1) throw DomainError(name + ": rows must be >= 1, got " + std::to_string(rows));
}

void require_proper_range(const char* who, int k, int epsilon) {
  if (epsilon > k - 1) {
    throw RangeError(std::string(who) + ": epsilon=" + std::to_string(epsilon) +
                     " exceeds k-1=" + std::to_string(k - 1) +
                     "; only the closed-form builder covers this range");
  }
}

}  // namespace

Triangle triangle_recursive(int k, int epsilon, int rows) {
  check_shape("triangle_recursive", k, epsilon, rows);
  require_proper_range("triangle_recursive", k, epsilon);

  Triangle tri{k, epsilon, TriangleMethod::recursive, {}};
  tri.rows.reserve(static_cast<std::size_t>(rows));
  tri.rows.push_back({Nat(1)});
  // row i holds |P_{i+1, delta}| at index delta-1
  for (int i = 1; i < rows; ++i) {
    const auto prev = [&](int delta) { return tri.at(i - 1, delta - 1).value(); };
    std::vector<Nat> row;
    row.reserve(static_cast<std::size_t>(i) + 1);

    mpz_class first = 0;
    for (int j = 1; j <= k; ++j) first += binomial(k, j).value() * prev(j);
    for (int j = 1; j <= epsilon; ++j) first -= binomial(epsilon, j).value() * prev(j);
    row.emplace_back(std::move(first));

    for (int delta = 2; delta <= i + 1; ++delta) {
      mpz_class v = 0;
      for (int j = 0; j <= k; ++j) v += binomial(k, j).value() * prev(delta - 1 + j);
      row.emplace_back(std::move(v));
    }
    tri.rows.push_back(std::move(row));
  }
  return tri;
}

Triangle triangle_closed_form(int k, int epsilon, int rows) {
  check_shape("triangle_closed_form", k, epsilon, rows);
  Triangle tri{k, epsilon, TriangleMethod::closed_form, {}};
  tri.rows.resize(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j <= i; ++j) tri.rows[i].push_back(strict_count(StrictQuery(k, i + 1, j + 1, epsilon)));
  }
  return tri;
}

Triangle triangle_riordan(int k, int epsilon, int rows) {
  check_shape("triangle_riordan", k, epsilon, rows);
  require_proper_range("triangle_riordan", k, epsilon);
  const int order = rows - 1;
  const TruncatedSeries c = kcatalan_series(k, order);
  RiordanSpec spec{series_power(c, k - epsilon), series_power(c, k).shifted()};
  Triangle tri = riordan_triangle(spec, rows);
  tri.k = k;
  tri.epsilon = epsilon;
  return tri;
}

Triangle build_triangle(TriangleMethod method, int k, int epsilon, int rows) {
  switch (method) {
    case TriangleMethod::recursive:
      return triangle_recursive(k, epsilon, rows);
    case TriangleMethod::closed_form:
      return triangle_closed_form(k, epsilon, rows);
    case TriangleMethod::riordan:
      return triangle_riordan(k, epsilon, rows);
  }
  throw DomainError("build_triangle: unknown method");
}

Nat irreducible_count(int k, int n) {
  if (k < 2) throw DomainError("irreducible_count: k must be >= 2, got " + std::to_string(k));
  if (n < 1) throw DomainError("irreducible_count: n must be >= 1, got " + std::to_string(n));
  return raney_coefficient(k, k - 1, n - 1);
}

Nat weak_count_formula(int k, int n, int delta, int epsilon, int m) {
  if (k < 2) throw DomainError("weak_count_formula: k must be >= 2, got " + std::to_string(k));
  if (n < 1) throw DomainError("weak_count_formula: n must be >= 1, got " + std::to_string(n));
  if (m < 0 || delta < 0 || epsilon < 0) {
    throw DomainError("weak_count_formula: m, delta, epsilon must be >= 0");
  }
  if (delta == 0 && epsilon > 0) {
    throw RangeError("weak_count_formula: delta = 0 requires epsilon = 0");
  }
  if (epsilon > (k - 1) * delta) {
    throw RangeError("weak_count_formula: epsilon=" + std::to_string(epsilon) +
                     " exceeds (k-1)*delta=" + std::to_string((k - 1) * delta));
  }
  const int index = n - delta - m;
  if (index < 0) return Nat{};
  const int power = k * delta - epsilon + (k - 1) * m;
  if (power == 0) return Nat(index == 0 ? 1 : 0);  // [t^index] 1
  return raney_coefficient(k, power, index);
}

}  // namespace pathpairs
