#include "pathpairs/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace pathpairs {

long long Mismatch::coord(const std::string& name) const {
  for (const auto& [key, v] : coords) {
    if (key == name) return v;
  }
  throw std::out_of_range("Mismatch: no coordinate '" + name + "'");
}

const std::string& Mismatch::value(const std::string& route) const {
  for (const auto& [key, v] : values) {
    if (key == route) return v;
  }
  throw std::out_of_range("Mismatch: no route '" + route + "'");
}

bool operator==(const Mismatch& a, const Mismatch& b) {
  return std::tie(a.battery, a.coords, a.values) == std::tie(b.battery, b.coords, b.values);
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass:
      return "pass";
    case ReportStatus::fail:
      return "fail";
    case ReportStatus::pass_with_known_discrepancies:
      return "pass_with_known_discrepancies";
  }
  return "fail";
}

void VerificationReport::absorb(const VerificationReport& other) {
  cells_checked += other.cells_checked;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

void VerificationReport::sort_mismatches() {
  std::stable_sort(mismatches.begin(), mismatches.end(), [](const Mismatch& a, const Mismatch& b) {
    return std::tie(a.battery, a.coords) < std::tie(b.battery, b.coords);
  });
}

}  // namespace pathpairs
