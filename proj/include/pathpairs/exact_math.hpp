#pragma once

// Exact combinatorial primitives and the closed counting formulas for
// strict k-path pairs.

#include <cstdint>
#include <optional>
#include <vector>

#include "pathpairs/nat.hpp"

namespace pathpairs {

/// A request for |P^{k,eps}_{n,delta}|: k-path pairs whose lower path has
/// (k-1)n steps, whose upper path is eps steps shorter, and whose terminal
/// x-coordinates differ by delta.
///
/// k >= 2 and n >= 1 are enforced on construction, as are delta >= 0 and
/// epsilon >= 0. Queries outside 1 <= delta <= n, epsilon <= (k-1)n are
/// legal but denote empty sets.
struct StrictQuery {
  int k;
  int n;
  int delta;
  int epsilon;

  StrictQuery(int k, int n, int delta, int epsilon);

  [[nodiscard]] bool in_domain() const;
};

/// epsilon = (k-1) * epsilon1 + epsilon2.
struct EpsilonSplit {
  int epsilon1;
  int epsilon2;

  friend bool operator==(const EpsilonSplit&, const EpsilonSplit&) = default;
};

/// C(a, b), or 0 when b < 0, b > a or a < 0.
Nat binomial(std::int64_t a, std::int64_t b);

/// R_{k,r}(n) = [t^n] C_k(t)^r = r/(kn+r) * C(kn+r, n).
///
/// Evaluated as r * C(kn+r, n) followed by an exact division; a non-zero
/// remainder is a bug and throws std::logic_error.
Nat raney_coefficient(int k, int r, int n);

/// Closed form ((k delta - eps)/(kn - eps)) C(kn - eps, n - delta), valid
/// for eps <= (k-1) delta. Throws RangeError outside that range; returns 0
/// for out-of-domain queries.
Nat strict_count_formula(const StrictQuery& q);

/// The split used when none is supplied: eps2 = eps mod (k-1), except at
/// eps = (k-1)n where eps1 would reach n and (n-1, k-1) is used instead.
EpsilonSplit canonical_split(const StrictQuery& q);

/// All splits with 0 <= eps2 <= k-1 and eps1 <= n-1 (at most two).
std::vector<EpsilonSplit> legal_splits(const StrictQuery& q);

/// Summation decomposition
///   sum_{i=1}^{delta} C(eps1, delta-i) |P^{k,eps2}_{n-eps1,i}|
/// with each inner term from the closed form. Valid for every epsilon.
/// Throws SplitError on an illegal split; returns 0 out of domain.
Nat strict_count_general(const StrictQuery& q, std::optional<EpsilonSplit> split = std::nullopt);

/// Closed form where valid, summation decomposition otherwise.
Nat strict_count(const StrictQuery& q);

}  // namespace pathpairs
