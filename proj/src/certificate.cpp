#include "qleontief/certificate.hpp"

namespace qleontief {

nlohmann::json to_json(const Certificate& cert, const FinitePoset& domain) {
  nlohmann::json j;
  j["verdict"] = cert.pass ? "pass" : "fail";
  j["property"] = cert.property;
  auto& w = j["witnesses"] = nlohmann::json::array();
  for (Element x : cert.witnesses) w.push_back(domain.id(x));
  if (!cert.levels.empty()) {
    auto& levels = j["levels"] = nlohmann::json::array();
    for (const auto& l : cert.levels) levels.push_back(to_string(l));
  }
  if (!cert.detail.empty()) j["detail"] = cert.detail;
  if (!cert.dual_table.empty()) {
    auto& table = j["dual_table"] = nlohmann::json::object();
    for (const auto& entry : cert.dual_table) {
      table[to_string(entry.level)] = entry.point ? nlohmann::json(domain.id(*entry.point)) : nlohmann::json();
    }
  }
  if (!cert.facets.empty()) {
    auto& facets = j["facets"] = nlohmann::json::object();
    for (const auto& [name, ok] : cert.facets) facets[name] = ok;
  }
  return j;
}

}  // namespace qleontief
