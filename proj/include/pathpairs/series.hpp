#pragma once

// Exact truncated power series over the integers, the k-Catalan generating
// function, and Riordan-array machinery (entry extraction, A/Z sequences).

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pathpairs/nat.hpp"
#include "pathpairs/report.hpp"

namespace pathpairs {

/// c_0 + c_1 t + ... + c_N t^N (mod t^{N+1}) with signed exact coefficients.
/// Binary operations truncate to the smaller of the two orders.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order = 0);
  explicit TruncatedSeries(std::vector<mpz_class> coeffs);
  TruncatedSeries(std::initializer_list<long> coeffs);

  static TruncatedSeries one(int order);
  /// t, at the given order (order >= 1 to be non-zero).
  static TruncatedSeries variable(int order);

  [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  [[nodiscard]] const mpz_class& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  mpz_class& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] bool is_zero() const;

  /// Drops coefficients above `order`.
  [[nodiscard]] TruncatedSeries truncated(int order) const;
  /// Appends zero coefficients up to `order`. Only meaningful for series that
  /// are known polynomials (all dropped coefficients were zero).
  [[nodiscard]] TruncatedSeries padded(int order) const;
  /// t * s, keeping the order.
  [[nodiscard]] TruncatedSeries shifted() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  [[nodiscard]] std::vector<std::string> decimal_coeffs() const;

 private:
  std::vector<mpz_class> coeffs_;
};

/// s^e by repeated squaring; s^0 is the constant 1 at s.order().
TruncatedSeries series_power(const TruncatedSeries& s, int e);

/// outer(inner(t)) truncated to min(outer.order(), inner.order()).
/// Requires inner(0) = 0 (throws DomainError otherwise).
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// C_k(t) through t^order, from the fixed point C = 1 + t C^k.
TruncatedSeries kcatalan_series(int k, int order);

/// A proper Riordan array R(d, h): d(0) != 0, h(0) = 0, h'(0) != 0.
struct RiordanSpec {
  TruncatedSeries d;
  TruncatedSeries h;

  /// Throws DomainError when a properness condition fails. h'(0) can only be
  /// inspected when h has order >= 1.
  void validate() const;
};

enum class TriangleMethod { recursive, closed_form, riordan };

std::string to_string(TriangleMethod m);

/// Lower-triangular array materialized to rows.size() rows; row i holds
/// i + 1 entries. k and epsilon record provenance; a triangle extracted
/// from an arbitrary Riordan spec carries k = epsilon = 0.
struct Triangle {
  int k = 0;
  int epsilon = 0;
  TriangleMethod method = TriangleMethod::riordan;
  std::vector<std::vector<Nat>> rows;

  [[nodiscard]] int size() const { return static_cast<int>(rows.size()); }
  /// Entry (i, j), or 0 when j lies outside row i.
  [[nodiscard]] Nat at(int i, int j) const;
};

/// Entry (i, j) = [t^i] d h^j for 0 <= j <= i < rows. Throws DomainError
/// if the spec is improper or yields a negative entry, RangeError if the
/// series are truncated below rows - 1.
Triangle riordan_triangle(const RiordanSpec& spec, int rows);

struct AZPair {
  TruncatedSeries a;
  TruncatedSeries z;
};

/// A(t) = (1+t)^k and Z(t) = ((1+t)^k - (1+t)^epsilon) / t, as exact
/// polynomials (order = degree). Requires 0 <= epsilon <= k - 1.
AZPair az_polynomials(int k, int epsilon);

/// Checks every entry of rows 1.. against its A/Z-sequence prediction from
/// the previous row. Coefficients of A and Z beyond their order are zero.
VerificationReport check_az_recurrence(const Triangle& tri, const TruncatedSeries& a,
                                       const TruncatedSeries& z);

/// Checks h = t A(h) and d (1 - t Z(h)) = d(0) coefficientwise through
/// t^order. A and Z are treated as polynomials; d and h must have order >=
/// `order`.
VerificationReport check_fundamental_identities(const RiordanSpec& spec, const TruncatedSeries& a,
                                                const TruncatedSeries& z, int order);

}  // namespace pathpairs
