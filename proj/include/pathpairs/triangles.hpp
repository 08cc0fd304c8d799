#pragma once

// (k, eps)-Catalan triangles A^{k,eps}, entry (i, j) = |P^{k,eps}_{i+1,j+1}|,
// built three independent ways, plus the closed counts for weak pairs.

#include "pathpairs/nat.hpp"
#include "pathpairs/series.hpp"

namespace pathpairs {

/// Row-by-row from the path-pair recurrence. Requires 0 <= eps <= k-1.
Triangle triangle_recursive(int k, int epsilon, int rows);

/// Entry-by-entry from the closed counting formulas; the only builder that
/// accepts eps > k-1 (leading entries are then 0).
Triangle triangle_closed_form(int k, int epsilon, int rows);

/// R(C_k^{k-eps}, t C_k^k) truncated at order rows-1. Requires eps <= k-1.
Triangle triangle_riordan(int k, int epsilon, int rows);

Triangle build_triangle(TriangleMethod method, int k, int epsilon, int rows);

/// Closed weak pairs with a single return: [t^{n-1}] C_k^{k-1}.
Nat irreducible_count(int k, int n);

/// Weak pairs with m returns: [t^{n-delta-m}] C_k^{k delta - eps + (k-1) m}.
/// Defined for delta = eps = 0 or 0 <= eps <= (k-1) delta; throws
/// RangeError elsewhere.
Nat weak_count_formula(int k, int n, int delta, int epsilon, int m);

}  // namespace pathpairs
