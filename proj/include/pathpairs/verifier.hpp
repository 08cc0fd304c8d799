#pragma once

// Cross-checks between independent computation routes, golden-fixture
// diffs, and the allowlist of known discrepancies for weak pairs.

#include <array>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathpairs/report.hpp"
#include "pathpairs/series.hpp"

namespace pathpairs {

/// A weak-pair cell whose formula and oracle values are known to differ
/// under the shared-vertex return convention. Only closed-pair cells
/// (delta = epsilon = 0) with m >= 2, or n = 1, are admissible.
struct AllowlistEntry {
  int k;
  int n;
  int m;
  std::string oracle;
  std::string formula;
};

class Allowlist {
 public:
  Allowlist() = default;

  /// Throws DomainError on schema violations or inadmissible entries.
  static Allowlist from_json(const nlohmann::json& j);
  static Allowlist load(const std::filesystem::path& path);

  [[nodiscard]] bool contains(const Mismatch& m) const;
  [[nodiscard]] const std::vector<AllowlistEntry>& entries() const { return entries_; }
  [[nodiscard]] int version() const { return version_; }

 private:
  int version_ = 1;
  std::vector<AllowlistEntry> entries_;
};

/// Location of the shipped fixtures (figure CSVs, weak_allowlist.json).
std::filesystem::path default_data_dir();

/// Oracle vs closed form for every 1 <= delta <= n <= max_n, plus the
/// recursive and Riordan triangles when epsilon <= k-1. Strict cells are
/// never allowlisted.
VerificationReport cross_check_strict(int k, int epsilon, int max_n);

/// Closed weak pairs: the oracle's return-count distribution vs
/// weak_count_formula for every n <= max_n and m >= 1.
VerificationReport cross_check_weak(int k, int max_n, const Allowlist& allowlist);

/// Bit-exact comparison of a triangle against golden CSV text.
VerificationReport check_golden(const Triangle& tri, std::string_view csv_text);

struct IdentityOptions {
  int order = 16;
  int sample_budget = 500;
  /// Test hook: lets a caller corrupt the A/Z polynomials before they are
  /// checked, to prove the suite detects faults.
  std::function<void(int k, int epsilon, AZPair&)> tamper_az;
};

/// The cross-module identity batteries, exact equality only.
VerificationReport identity_suite(const IdentityOptions& options);

inline VerificationReport identity_suite(int order, int sample_budget = 500) {
  return identity_suite(IdentityOptions{order, sample_budget, {}});
}

/// Deterministic grid of in-domain strict queries (ordered by n, k, delta,
/// epsilon) truncated to `budget` entries. Elements are {k, n, delta, epsilon}.
std::vector<std::array<int, 4>> strict_query_grid(int budget, int max_k = 5, int max_n = 10);

}  // namespace pathpairs
