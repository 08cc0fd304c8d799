#include "pathpairs/exact_math.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pathpairs {

StrictQuery::StrictQuery(int k_, int n_, int delta_, int epsilon_)
    : k(k_), n(n_), delta(delta_), epsilon(epsilon_) {
  if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  if (delta < 0) throw DomainError("delta must be >= 0, got " + std::to_string(delta));
  if (epsilon < 0) throw DomainError("epsilon must be >= 0, got " + std::to_string(epsilon));
}

bool StrictQuery::in_domain() const {
  return delta >= 1 && delta <= n && epsilon <= (k - 1) * n;
}

Nat binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return Nat{};
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return Nat(std::move(out));
}

Nat raney_coefficient(int k, int r, int n) {
  if (k < 2) throw DomainError("raney_coefficient: k must be >= 2, got " + std::to_string(k));
  if (r < 1) throw DomainError("raney_coefficient: r must be >= 1, got " + std::to_string(r));
  if (n < 0) throw DomainError("raney_coefficient: n must be >= 0, got " + std::to_string(n));

  const std::int64_t top = static_cast<std::int64_t>(k) * n + r;
  mpz_class numer = binomial(top, n).value() * r;
  const mpz_class denom = top;
  if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) {
    throw std::logic_error("raney_coefficient: inexact division for k=" + std::to_string(k) +
                           " r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
  mpz_divexact(numer.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  return Nat(std::move(numer));
}

Nat strict_count_formula(const StrictQuery& q) {
  if (!q.in_domain()) return Nat{};
  if (q.epsilon > (q.k - 1) * q.delta) {
    throw RangeError("strict_count_formula: epsilon=" + std::to_string(q.epsilon) +
                     " exceeds (k-1)*delta=" + std::to_string((q.k - 1) * q.delta) +
                     "; use strict_count_general");
  }
  return raney_coefficient(q.k, q.k * q.delta - q.epsilon, q.n - q.delta);
}

EpsilonSplit canonical_split(const StrictQuery& q) {
  EpsilonSplit s{q.epsilon / (q.k - 1), q.epsilon % (q.k - 1)};
  if (s.epsilon1 > q.n - 1) s = {q.n - 1, q.k - 1};
  return s;
}

std::vector<EpsilonSplit> legal_splits(const StrictQuery& q) {
  std::vector<EpsilonSplit> out;
  for (int e2 = 0; e2 <= q.k - 1 && e2 <= q.epsilon; ++e2) {
    if ((q.epsilon - e2) % (q.k - 1) != 0) continue;
    const int e1 = (q.epsilon - e2) / (q.k - 1);
    if (e1 <= q.n - 1) out.push_back({e1, e2});
  }
  return out;
}

Nat strict_count_general(const StrictQuery& q, std::optional<EpsilonSplit> split) {
  if (split) {
    const auto [e1, e2] = *split;
    if (e1 < 0 || e2 < 0 || e2 > q.k - 1 || (q.k - 1) * e1 + e2 != q.epsilon) {
      throw SplitError("invalid split (" + std::to_string(e1) + ", " + std::to_string(e2) +
                       ") for epsilon=" + std::to_string(q.epsilon) + ", k=" + std::to_string(q.k));
    }
    if (e1 > q.n - 1) {
      throw SplitError("split epsilon1=" + std::to_string(e1) + " exceeds n-1=" +
                       std::to_string(q.n - 1));
    }
  }
  if (!q.in_domain()) return Nat{};

  const auto [e1, e2] = split ? *split : canonical_split(q);
  Nat total;
  for (int i = 1; i <= q.delta; ++i) {
    // inner queries have eps2 <= k-1 <= (k-1)i, so the closed form applies;
    // i > n - eps1 lands out of domain and contributes 0
    total += binomial(e1, q.delta - i) * strict_count_formula(StrictQuery(q.k, q.n - e1, i, e2));
  }
  return total;
}

Nat strict_count(const StrictQuery& q) {
  if (q.epsilon <= (q.k - 1) * q.delta) return strict_count_formula(q);
  return strict_count_general(q);
}

}  // namespace pathpairs
