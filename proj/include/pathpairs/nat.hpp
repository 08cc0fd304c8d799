#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pathpairs/errors.hpp"

namespace pathpairs {

/// Arbitrary-precision non-negative integer.
///
/// Every cardinality in the library is a Nat. Construction from a negative
/// value throws DomainError, so a Nat in hand is always >= 0. The decimal
/// string form (no sign, no exponent, no leading zeros) is the only
/// serialization used by file and wire formats.
class Nat {
 public:
  Nat() = default;

  template <std::integral T>
  Nat(T v) {  // NOLINT(google-explicit-constructor): literals in tests
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw DomainError("Nat: negative value " + std::to_string(v));
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Nat(mpz_class v);

  /// Parses a decimal string of digits. Throws DomainError otherwise.
  static Nat parse(std::string_view text);

  [[nodiscard]] std::string str() const { return value_.get_str(10); }
  [[nodiscard]] const mpz_class& value() const { return value_; }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }

  Nat& operator+=(const Nat& o) {
    value_ += o.value_;
    return *this;
  }
  Nat& operator*=(const Nat& o) {
    value_ *= o.value_;
    return *this;
  }

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.str(); }

 private:
  mpz_class value_{0};
};

}  // namespace pathpairs
