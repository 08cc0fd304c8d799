#include "pathpairs/formats.hpp"

#include <sstream>

#include "pathpairs/errors.hpp"

namespace pathpairs {

std::string triangle_to_csv(const Triangle& tri) {
  std::string out;
  for (const auto& row : tri.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out.push_back(',');
      out += row[j].str();
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::vector<Nat>> triangle_rows_from_csv(std::string_view text) {
  std::vector<std::vector<Nat>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) {
      if (pos >= text.size()) break;
      throw DomainError("triangle CSV: blank line at row " + std::to_string(rows.size()));
    }
    std::vector<Nat> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      row.push_back(Nat::parse(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (row.size() != rows.size() + 1) {
      throw DomainError("triangle CSV: row " + std::to_string(rows.size()) + " has " +
                        std::to_string(row.size()) + " fields, expected " +
                        std::to_string(rows.size() + 1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json triangle_to_json(const Triangle& tri) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : tri.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return {{"k", tri.k}, {"epsilon", tri.epsilon}, {"method", to_string(tri.method)}, {"rows", rows}};
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
  return {{"order", s.order()}, {"coeffs", s.decimal_coeffs()}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw DomainError("series JSON: coeffs must be a non-empty array");
  std::vector<mpz_class> out;
  for (const auto& c : coeffs) {
    const auto text = c.get<std::string>();
    mpz_class v;
    if (v.set_str(text, 10) != 0) throw DomainError("series JSON: bad coefficient '" + text + "'");
    out.push_back(std::move(v));
  }
  if (j.at("order").get<int>() != static_cast<int>(out.size()) - 1) {
    throw DomainError("series JSON: order does not match coefficient count");
  }
  return TruncatedSeries(std::move(out));
}

namespace {

nlohmann::json mismatch_to_json(const Mismatch& m) {
  nlohmann::json coords = nlohmann::json::object();
  for (const auto& [k, v] : m.coords) coords[k] = v;
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [k, v] : m.values) values[k] = v;
  return {{"battery", m.battery}, {"coords", coords}, {"values", values}};
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : report.mismatches) mismatches.push_back(mismatch_to_json(m));
  nlohmann::json known = nlohmann::json::array();
  for (const auto& m : report.known_discrepancies) known.push_back(mismatch_to_json(m));
  return {{"suite", report.suite},
          {"status", to_string(report.status)},
          {"cells_checked", report.cells_checked.str()},
          {"mismatches", mismatches},
          {"known_discrepancies", known}};
}

}  // namespace pathpairs
