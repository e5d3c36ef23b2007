#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qleontief/order.hpp"
#include "qleontief/rational.hpp"

namespace qleontief {

struct DualEntry {
  Rational level;
  std::optional<Element> point;
};

/// Outcome of one certifier. A failing certificate always names concrete
/// witnesses that violate the property when replayed.
struct Certificate {
  bool pass = true;
  std::string property;
  std::vector<Element> witnesses;
  std::vector<Rational> levels;
  std::string detail;
  std::vector<DualEntry> dual_table;
  /// Sub-verdicts for composite checks, in evaluation order.
  std::vector<std::pair<std::string, bool>> facets;

  static Certificate passed(std::string property) {
    Certificate c;
    c.property = std::move(property);
    return c;
  }
  static Certificate failed(std::string property, std::vector<Element> witnesses, std::string detail,
                            std::vector<Rational> levels = {}) {
    Certificate c;
    c.pass = false;
    c.property = std::move(property);
    c.witnesses = std::move(witnesses);
    c.detail = std::move(detail);
    c.levels = std::move(levels);
    return c;
  }
};

nlohmann::json to_json(const Certificate& cert, const FinitePoset& domain);

}  // namespace qleontief
