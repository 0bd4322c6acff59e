#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace eqlab::harness {

using json = nlohmann::json;

struct Criterion {
  std::string name;
  double measured;
  std::string relation;  // "<=", "<", ">=", ">"
  double tolerance;
  bool passed;
};

inline Criterion check(std::string name, double measured, std::string relation, double tolerance) {
  bool ok = false;
  if (relation == "<=") ok = measured <= tolerance;
  else if (relation == "<") ok = measured < tolerance;
  else if (relation == ">=") ok = measured >= tolerance;
  else if (relation == ">") ok = measured > tolerance;
  return {std::move(name), measured, std::move(relation), tolerance, ok && std::isfinite(measured)};
}

/// Plain-text cell formatting used by every CSV: doubles in scientific
/// notation with 12 significant digits, "." as decimal separator.
inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

class CsvTable {
 public:
  using Cell = std::variant<double, long long, std::string>;

  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  std::size_t size() const noexcept { return rows_.size(); }

  std::string str() const {
    std::string out;
    append_line(out, header_);
    for (const auto& row : rows_) {
      std::vector<std::string> cells;
      for (const auto& c : row) {
        if (const auto* d = std::get_if<double>(&c)) cells.push_back(format_number(*d));
        else if (const auto* i = std::get_if<long long>(&c)) cells.push_back(std::to_string(*i));
        else cells.push_back(std::get<std::string>(c));
      }
      append_line(out, cells);
    }
    return out;
  }

 private:
  static void append_line(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

struct RunSummary {
  std::string experiment;
  std::vector<Criterion> criteria;
  json measurements = json::object();
  json config = json::object();
  std::vector<std::string> artifacts;
  double duration_seconds = 0.0;

  bool passed() const {
    for (const auto& c : criteria) {
      if (!c.passed) return false;
    }
    return true;
  }

  json to_json() const {
    json rows = json::array();
    for (const auto& c : criteria) {
      rows.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"relation", c.relation},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
    }
    return json{{"experiment", experiment},   {"passed", passed()},
                {"criteria", rows},           {"measurements", measurements},
                {"config", config},           {"artifacts", artifacts},
                {"duration_seconds", duration_seconds}};
  }
};

}  // namespace eqlab::harness
