#include "pathpairs/series.hpp"

#include <algorithm>
#include <string>

#include "pathpairs/errors.hpp"

namespace pathpairs {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw DomainError("TruncatedSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("TruncatedSeries: needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs) {
  if (coeffs.size() == 0) throw DomainError("TruncatedSeries: needs at least one coefficient");
  for (long c : coeffs) coeffs_.emplace_back(c);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) throw DomainError("TruncatedSeries: negative order");
  if (order >= this->order()) return *this;
  return TruncatedSeries(
      std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::padded(int order) const {
  if (order <= this->order()) return *this;
  TruncatedSeries out(order);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
  return out;
}

TruncatedSeries TruncatedSeries::shifted() const {
  TruncatedSeries out(order());
  std::copy(coeffs_.begin(), coeffs_.end() - 1, out.coeffs_.begin() + 1);
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<std::string> TruncatedSeries::decimal_coeffs() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str(10));
  return out;
}

TruncatedSeries series_power(const TruncatedSeries& s, int e) {
  if (e < 0) throw DomainError("series_power: negative exponent");
  TruncatedSeries result = TruncatedSeries::one(s.order());
  TruncatedSeries base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (sgn(inner[0]) != 0) throw DomainError("compose: inner series must vanish at t = 0");
  const int n = std::min(outer.order(), inner.order());
  const TruncatedSeries h = inner.truncated(n);
  // Horner: (((a_n) h + a_{n-1}) h + ...) + a_0
  TruncatedSeries acc(n);
  for (int i = n; i >= 0; --i) {
    acc = acc * h;
    acc[0] += outer[i];
  }
  return acc;
}

TruncatedSeries kcatalan_series(int k, int order) {
  if (k < 2) throw DomainError("kcatalan_series: k must be >= 2, got " + std::to_string(k));
  if (order < 0) throw DomainError("kcatalan_series: negative order");
  TruncatedSeries c = TruncatedSeries::one(order);
  // each pass of C <- 1 + t C^k fixes one more coefficient
  for (int pass = 0; pass <= order; ++pass) {
    TruncatedSeries next = series_power(c, k).shifted();
    next[0] += 1;
    c = std::move(next);
  }
  return c;
}

void RiordanSpec::validate() const {
  if (sgn(d[0]) == 0) throw DomainError("Riordan spec is improper: d(0) = 0");
  if (sgn(h[0]) != 0) throw DomainError("Riordan spec is improper: h(0) != 0");
  if (h.order() >= 1 && sgn(h[1]) == 0) throw DomainError("Riordan spec is improper: h'(0) = 0");
}

std::string to_string(TriangleMethod m) {
  switch (m) {
    case TriangleMethod::recursive:
      return "recursive";
    case TriangleMethod::closed_form:
      return "closed_form";
    case TriangleMethod::riordan:
      return "riordan";
  }
  return "riordan";
}

Nat Triangle::at(int i, int j) const {
  if (i < 0 || i >= size() || j < 0 || j >= static_cast<int>(rows[i].size())) return Nat{};
  return rows[i][j];
}

Triangle riordan_triangle(const RiordanSpec& spec, int rows) {
  if (rows < 1) throw DomainError("riordan_triangle: rows must be >= 1");
  spec.validate();
  if (spec.d.order() < rows - 1 || spec.h.order() < rows - 1) {
    throw RangeError("riordan_triangle: series truncated below order " + std::to_string(rows - 1));
  }
  const int order = rows - 1;
  const TruncatedSeries h = spec.h.truncated(order);
  TruncatedSeries column = spec.d.truncated(order);  // d h^j

  Triangle tri;
  tri.method = TriangleMethod::riordan;
  tri.rows.resize(static_cast<std::size_t>(rows));
  for (int j = 0; j < rows; ++j) {
    for (int i = j; i < rows; ++i) {
      if (sgn(column[i]) < 0) {
        throw DomainError("riordan_triangle: negative entry at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
      }
      tri.rows[i].push_back(Nat(column[i]));
    }
    column = column * h;
  }
  return tri;
}

AZPair az_polynomials(int k, int epsilon) {
  if (k < 2) throw DomainError("az_polynomials: k must be >= 2, got " + std::to_string(k));
  if (epsilon < 0 || epsilon > k - 1) {
    throw RangeError("az_polynomials: epsilon must lie in [0, k-1], got " + std::to_string(epsilon));
  }
  const TruncatedSeries one_plus_t{1, 1};
  const TruncatedSeries a = series_power(one_plus_t.padded(k), k);
  const TruncatedSeries b = series_power(one_plus_t.padded(k), epsilon);
  const TruncatedSeries numer = a - b;
  if (sgn(numer[0]) != 0) throw std::logic_error("az_polynomials: numerator has a constant term");
  std::vector<mpz_class> z(numer.coeffs().begin() + 1, numer.coeffs().end());
  return {a, TruncatedSeries(std::move(z))};
}

namespace {

mpz_class coeff_or_zero(const TruncatedSeries& s, int i) {
  return i <= s.order() ? s[i] : mpz_class(0);
}

}  // namespace

VerificationReport check_az_recurrence(const Triangle& tri, const TruncatedSeries& a,
                                       const TruncatedSeries& z) {
  VerificationReport report;
  report.suite = "az_recurrence";
  for (int n = 1; n < tri.size(); ++n) {
    for (int col = 0; col <= n; ++col) {
      const TruncatedSeries& seq = col == 0 ? z : a;
      const int first = col == 0 ? 0 : col - 1;  // entry multiplied by seq_0
      mpz_class predicted = 0;
      for (int i = 0; first + i <= n - 1; ++i) {
        predicted += coeff_or_zero(seq, i) * tri.at(n - 1, first + i).value();
      }
      const Nat actual = tri.at(n, col);
      report.count_cell();
      if (cmp(predicted, actual.value()) != 0) {
        report.record({"az_recurrence",
                       {{"row", n}, {"col", col}},
                       {{"triangle", actual.str()}, {"az", predicted.get_str()}}});
      }
    }
  }
  report.finalize();
  return report;
}

VerificationReport check_fundamental_identities(const RiordanSpec& spec, const TruncatedSeries& a,
                                                const TruncatedSeries& z, int order) {
  if (spec.d.order() < order || spec.h.order() < order) {
    throw RangeError("check_fundamental_identities: d and h must reach order " +
                     std::to_string(order));
  }
  VerificationReport report;
  report.suite = "fundamental_identities";
  const TruncatedSeries d = spec.d.truncated(order);
  const TruncatedSeries h = spec.h.truncated(order);

  // h - t A(h)
  const TruncatedSeries a_of_h = compose(a.truncated(order).padded(order), h);
  const TruncatedSeries h_residual = h - a_of_h.shifted();

  // d (1 - t Z(h)) - d(0)
  const TruncatedSeries z_of_h = compose(z.truncated(order).padded(order), h);
  TruncatedSeries d_residual = d * (TruncatedSeries::one(order) - z_of_h.shifted());
  d_residual[0] -= d[0];

  for (int i = 0; i <= order; ++i) {
    report.count_cell();
    if (sgn(h_residual[i]) != 0) {
      report.record({"h_equals_tAh", {{"degree", i}}, {{"residual", h_residual[i].get_str()}}});
    }
    report.count_cell();
    if (sgn(d_residual[i]) != 0) {
      report.record({"d_times_1_minus_tZh", {{"degree", i}}, {{"residual", d_residual[i].get_str()}}});
    }
  }
  report.finalize();
  return report;
}

}  // namespace pathpairs
