#include "pathpairs/nat.hpp"

#include <algorithm>
#include <cctype>

namespace pathpairs {

Nat::Nat(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw DomainError("Nat: negative value " + value_.get_str());
}

Nat Nat::parse(std::string_view text) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
  if (!digits) throw DomainError("Nat: not a decimal integer: '" + std::string(text) + "'");
  if (text.size() > 1 && text.front() == '0') {
    throw DomainError("Nat: leading zero in '" + std::string(text) + "'");
  }
  return Nat(mpz_class(std::string(text), 10));
}

}  // namespace pathpairs
