#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathpairs/nat.hpp"

namespace pathpairs {

/// One disagreement between computation routes.
struct Mismatch {
  std::string battery;  // which check produced it, e.g. "az_recurrence"
  std::vector<std::pair<std::string, long long>> coords;
  std::vector<std::pair<std::string, std::string>> values;  // route -> decimal value

  [[nodiscard]] long long coord(const std::string& name) const;
  [[nodiscard]] const std::string& value(const std::string& route) const;
};

bool operator==(const Mismatch& a, const Mismatch& b);

enum class ReportStatus { pass, fail, pass_with_known_discrepancies };

std::string to_string(ReportStatus s);

struct VerificationReport {
  std::string suite;
  Nat cells_checked;
  std::vector<Mismatch> mismatches;
  std::vector<Mismatch> known_discrepancies;
  ReportStatus status = ReportStatus::pass;

  void record(Mismatch m) { mismatches.push_back(std::move(m)); }
  void count_cell() { cells_checked += Nat(1); }

  /// Folds another report's cells and mismatches into this one.
  void absorb(const VerificationReport& other);

  /// Sorts mismatches by (battery, coords) and sets status. A mismatch is
  /// known when `is_known` accepts it; status is pass_with_known_discrepancies
  /// only if every mismatch is known.
  template <class Pred>
  void finalize(Pred is_known) {
    sort_mismatches();
    known_discrepancies.clear();
    for (const auto& m : mismatches) {
      if (is_known(m)) known_discrepancies.push_back(m);
    }
    if (mismatches.empty()) {
      status = ReportStatus::pass;
    } else if (known_discrepancies.size() == mismatches.size()) {
      status = ReportStatus::pass_with_known_discrepancies;
    } else {
      status = ReportStatus::fail;
    }
  }

  void finalize() {
    finalize([](const Mismatch&) { return false; });
  }

  [[nodiscard]] bool passed() const { return status != ReportStatus::fail; }

 private:
  void sort_mismatches();
};

}  // namespace pathpairs
