#include "pathpairs/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "pathpairs/errors.hpp"
#include "pathpairs/exact_math.hpp"
#include "pathpairs/formats.hpp"
#include "pathpairs/lattice.hpp"
#include "pathpairs/triangles.hpp"

namespace pathpairs {

namespace {

constexpr int kAllowlistVersion = 1;

std::string decimal(std::size_t v) { return std::to_string(v); }

}  // namespace

Allowlist Allowlist::from_json(const nlohmann::json& j) {
  Allowlist out;
  try {
    out.version_ = j.at("version").get<int>();
    if (out.version_ != kAllowlistVersion) {
      throw DomainError("allowlist: unsupported version " + std::to_string(out.version_));
    }
    for (const auto& e : j.at("entries")) {
      AllowlistEntry entry{e.at("k").get<int>(), e.at("n").get<int>(), e.at("m").get<int>(),
                           e.at("oracle").get<std::string>(), e.at("formula").get<std::string>()};
      if (e.at("delta").get<int>() != 0 || e.at("epsilon").get<int>() != 0) {
        throw DomainError("allowlist: only closed pairs (delta = epsilon = 0) may be listed");
      }
      if (entry.m < 2 && entry.n != 1) {
        throw DomainError("allowlist: entry k=" + std::to_string(entry.k) + " n=" +
                          std::to_string(entry.n) + " m=" + std::to_string(entry.m) +
                          " is not a degenerate-boundary cell");
      }
      Nat::parse(entry.oracle);
      Nat::parse(entry.formula);
      out.entries_.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("allowlist: malformed JSON: ") + ex.what());
  }
  return out;
}

Allowlist Allowlist::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("allowlist: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError("allowlist: " + path.string() + ": " + ex.what());
  }
  return from_json(j);
}

bool Allowlist::contains(const Mismatch& m) const {
  if (m.battery != "weak_returns") return false;
  return std::any_of(entries_.begin(), entries_.end(), [&](const AllowlistEntry& e) {
    return m.coord("k") == e.k && m.coord("n") == e.n && m.coord("delta") == 0 &&
           m.coord("epsilon") == 0 && m.coord("m") == e.m && m.value("oracle") == e.oracle &&
           m.value("formula") == e.formula;
  });
}

std::filesystem::path default_data_dir() { return PATHPAIRS_DATA_DIR; }

VerificationReport cross_check_strict(int k, int epsilon, int max_n) {
  if (k < 2) throw DomainError("cross_check_strict: k must be >= 2");
  if (epsilon < 0) throw DomainError("cross_check_strict: epsilon must be >= 0");
  if (max_n < 1) throw DomainError("cross_check_strict: max_n must be >= 1");

  VerificationReport report;
  report.suite = "strict";
  const bool proper = epsilon <= k - 1;
  Triangle recursive;
  Triangle riordan;
  if (proper) {
    recursive = triangle_recursive(k, epsilon, max_n);
    riordan = triangle_riordan(k, epsilon, max_n);
  }

  for (int n = 1; n <= max_n; ++n) {
    for (int delta = 1; delta <= n; ++delta) {
      const std::size_t oracle =
          (k - 1) * n < epsilon ? 0 : enumerate_strict(k, n, delta, epsilon).size();
      const Nat closed = strict_count(StrictQuery(k, n, delta, epsilon));

      std::vector<std::pair<std::string, std::string>> values{{"oracle", decimal(oracle)},
                                                              {"closed_form", closed.str()}};
      bool agree = closed == Nat(oracle);
      if (proper) {
        const Nat rec = recursive.at(n - 1, delta - 1);
        const Nat rio = riordan.at(n - 1, delta - 1);
        values.emplace_back("recursive", rec.str());
        values.emplace_back("riordan", rio.str());
        agree = agree && rec == closed && rio == closed;
      }
      report.count_cell();
      if (!agree) {
        report.record({"strict_routes",
                       {{"k", k}, {"epsilon", epsilon}, {"n", n}, {"delta", delta}},
                       std::move(values)});
      }
    }
  }
  report.finalize();
  return report;
}

VerificationReport cross_check_weak(int k, int max_n, const Allowlist& allowlist) {
  if (k < 2) throw DomainError("cross_check_weak: k must be >= 2");
  if (max_n < 2) throw DomainError("cross_check_weak: max_n must be >= 2");

  VerificationReport report;
  report.suite = "weak";
  for (int n = 1; n <= max_n; ++n) {
    std::map<int, std::size_t> by_returns;
    for (const auto& pair : enumerate_weak(k, n, 0, 0)) ++by_returns[pair.returns()];
    const int max_m = std::max(n, by_returns.empty() ? 0 : by_returns.rbegin()->first);
    for (int m = 1; m <= max_m; ++m) {
      const auto it = by_returns.find(m);
      const std::size_t oracle = it == by_returns.end() ? 0 : it->second;
      const Nat formula = weak_count_formula(k, n, 0, 0, m);
      report.count_cell();
      if (formula != Nat(oracle)) {
        report.record({"weak_returns",
                       {{"k", k}, {"n", n}, {"delta", 0}, {"epsilon", 0}, {"m", m}},
                       {{"oracle", decimal(oracle)}, {"formula", formula.str()}}});
      }
    }
  }
  report.finalize([&](const Mismatch& m) { return allowlist.contains(m); });
  return report;
}

VerificationReport check_golden(const Triangle& tri, std::string_view csv_text) {
  VerificationReport report;
  report.suite = "golden";
  const auto golden = triangle_rows_from_csv(csv_text);
  const int rows = std::max(tri.size(), static_cast<int>(golden.size()));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j <= i; ++j) {
      report.count_cell();
      const bool in_golden = i < static_cast<int>(golden.size());
      const bool in_tri = i < tri.size();
      const std::string want = in_golden ? golden[i][j].str() : "<missing>";
      const std::string got = in_tri ? tri.rows[i][j].str() : "<missing>";
      if (want != got) {
        report.record({"golden_cell",
                       {{"row", i}, {"col", j}},
                       {{"golden", want}, {to_string(tri.method), got}}});
      }
    }
  }
  report.finalize();
  return report;
}

std::vector<std::array<int, 4>> strict_query_grid(int budget, int max_k, int max_n) {
  std::vector<std::array<int, 4>> grid;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 2; k <= max_k; ++k) {
      for (int delta = 1; delta <= n; ++delta) {
        for (int eps = 0; eps <= (k - 1) * n; ++eps) {
          if (static_cast<int>(grid.size()) >= budget) return grid;
          grid.push_back({k, n, delta, eps});
        }
      }
    }
  }
  return grid;
}

namespace {

void expect_equal(VerificationReport& report, const std::string& battery,
                  std::vector<std::pair<std::string, long long>> coords, const std::string& lhs_name,
                  const mpz_class& lhs, const std::string& rhs_name, const mpz_class& rhs) {
  report.count_cell();
  if (cmp(lhs, rhs) != 0) {
    report.record({battery, std::move(coords), {{lhs_name, lhs.get_str()}, {rhs_name, rhs.get_str()}}});
  }
}

void series_batteries(VerificationReport& report, int order) {
  for (int k = 2; k <= 5; ++k) {
    const TruncatedSeries c = kcatalan_series(k, order);
    TruncatedSeries fixed_point = series_power(c, k).shifted() - c;
    fixed_point[0] += 1;
    for (int i = 0; i <= order; ++i) {
      expect_equal(report, "fixed_point_residual", {{"k", k}, {"degree", i}}, "residual",
                   fixed_point[i], "expected", 0);
      expect_equal(report, "kcatalan_vs_raney", {{"k", k}, {"n", i}}, "series", c[i], "raney",
                   raney_coefficient(k, 1, i).value());
    }
    if (k > 4) continue;
    for (int r = 1; r <= 8; ++r) {
      const TruncatedSeries p = series_power(c, r);
      for (int i = 0; i <= order; ++i) {
        expect_equal(report, "power_vs_raney", {{"k", k}, {"r", r}, {"n", i}}, "series", p[i],
                     "raney", raney_coefficient(k, r, i).value());
      }
    }
  }
}

void riordan_batteries(VerificationReport& report, const IdentityOptions& options) {
  const int order = options.order;
  for (int k = 2; k <= 4; ++k) {
    const TruncatedSeries c = kcatalan_series(k, order);
    for (int eps = 0; eps <= k - 1; ++eps) {
      const RiordanSpec spec{series_power(c, k - eps), series_power(c, k).shifted()};
      AZPair az = az_polynomials(k, eps);
      if (options.tamper_az) options.tamper_az(k, eps, az);

      auto tag = [&](VerificationReport sub) {
        for (auto& m : sub.mismatches) {
          m.coords.insert(m.coords.begin(), {{"k", k}, {"epsilon", eps}});
        }
        report.absorb(sub);
      };
      tag(check_fundamental_identities(spec, az.a, az.z, order));

      const int rows = std::min(order + 1, 12);
      const Triangle tri = riordan_triangle(spec, rows);
      tag(check_az_recurrence(tri, az.a, az.z));

      for (int i = 0; i < std::min(rows, 10); ++i) {
        for (int j = 0; j <= i; ++j) {
          expect_equal(report, "riordan_vs_formula",
                       {{"k", k}, {"epsilon", eps}, {"row", i}, {"col", j}}, "riordan",
                       tri.rows[i][j].value(), "formula",
                       strict_count_formula(StrictQuery(k, i + 1, j + 1, eps)).value());
        }
      }
    }
  }
}

void split_batteries(VerificationReport& report, int budget) {
  for (const auto& [k, n, delta, eps] : strict_query_grid(budget)) {
    const StrictQuery q(k, n, delta, eps);
    const std::vector<std::pair<std::string, long long>> coords{
        {"k", k}, {"n", n}, {"delta", delta}, {"epsilon", eps}};
    const Nat canonical = strict_count_general(q);
    for (const auto& split : legal_splits(q)) {
      auto c = coords;
      c.emplace_back("epsilon1", split.epsilon1);
      c.emplace_back("epsilon2", split.epsilon2);
      expect_equal(report, "split_invariance", std::move(c), "split",
                   strict_count_general(q, split).value(), "canonical", canonical.value());
    }
    if (eps <= (k - 1) * delta) {
      const Nat closed = strict_count_formula(q);
      expect_equal(report, "range_agreement", coords, "general", canonical.value(), "formula",
                   closed.value());
      // (kn - eps) divides (k delta - eps) C(kn - eps, n - delta)
      const mpz_class numer = binomial(k * n - eps, n - delta).value() * (k * delta - eps);
      const mpz_class denom = k * n - eps;
      const mpz_class rem = numer % denom;
      expect_equal(report, "exact_division", coords, "remainder", rem, "expected", 0);
      expect_equal(report, "strict_reduction", coords, "weak_m0",
                   weak_count_formula(k, n, delta, eps, 0).value(), "strict", closed.value());
    }
  }
}

void return_sum_battery(VerificationReport& report) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 20; ++n) {
      mpz_class sum = 0;
      for (int m = 1; m <= n; ++m) sum += weak_count_formula(k, n, 0, 0, m).value();
      expect_equal(report, "return_sum", {{"k", k}, {"n", n}}, "sum_over_m", sum, "kcatalan",
                   raney_coefficient(k, 1, n).value());
    }
  }
}

}  // namespace

VerificationReport identity_suite(const IdentityOptions& options) {
  if (options.order < 8) throw DomainError("identity_suite: order must be >= 8");
  VerificationReport report;
  report.suite = "identities";
  series_batteries(report, options.order);
  riordan_batteries(report, options);
  split_batteries(report, options.sample_budget);
  return_sum_battery(report);
  report.finalize();
  return report;
}

}  // namespace pathpairs
