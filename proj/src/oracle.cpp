#include "qleontief/oracle.hpp"

#include <algorithm>
#include <map>

namespace qleontief {
namespace {

std::string ids(const FinitePoset& p, std::initializer_list<Element> xs) {
  std::string out;
  for (Element x : xs) {
    if (!out.empty()) out += ", ";
    out += "'" + p.id(x) + "'";
  }
  return out;
}

std::vector<Rational> merged_levels(const Utility& u, const std::vector<Rational>& probes) {
  std::vector<Rational> levels = u.image();
  levels.insert(levels.end(), probes.begin(), probes.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

}  // namespace

CertifiedResult certify_quasi_leontief(const Utility& u) {
  const auto& p = u.domain();
  std::vector<Element> interior(u.size());
  // Level sets depend only on the value, so resolve each distinct value once.
  std::map<Rational, Element> least_by_value;
  for (Element x = 0; x < u.size(); ++x) {
    const auto& value = u.evaluate(x);
    auto it = least_by_value.find(value);
    if (it == least_by_value.end()) {
      const auto level = u.level_set(value);
      auto least = p.least_element(level);
      if (!least) {
        const auto minimal = p.minimal_elements(level);
        std::vector<Element> witnesses(minimal.begin(), minimal.begin() + std::min<std::size_t>(2, minimal.size()));
        auto cert = Certificate::failed("quasi_leontief", witnesses,
                                        "upper level set of '" + p.id(x) + "' (value " + to_string(value) +
                                            ") has no least element",
                                        {value});
        return {std::move(cert), std::nullopt};
      }
      it = least_by_value.emplace(value, *least).first;
    }
    interior[x] = it->second;
  }
  return {Certificate::passed("quasi_leontief"), detail::CertificationAccess::attach(u, std::move(interior))};
}

Utility certify(const Utility& u) {
  auto result = certify_quasi_leontief(u);
  if (!result.utility) throw CertificationError(result.certificate.detail, result.certificate);
  return *result.utility;
}

std::vector<Rational> default_probe_levels(const Utility& u) {
  const auto image = u.image();
  std::vector<Rational> out;
  if (image.empty()) return out;
  out.push_back(image.front() - Rational(1));
  for (std::size_t i = 0; i < image.size(); ++i) {
    out.push_back(image[i]);
    if (i + 1 < image.size()) out.push_back((image[i] + image[i + 1]) / Rational(2));
  }
  out.push_back(image.back() + Rational(1));
  return out;
}

Certificate certify_regular(const Utility& u, const std::vector<Rational>& probes) {
  const auto& p = u.domain();
  Certificate cert = Certificate::passed("regular");
  for (const auto& level : merged_levels(u, probes)) {
    const auto members = u.level_set(level);
    if (members.empty()) continue;
    auto least = p.least_element(members);
    if (!least) {
      const auto minimal = p.minimal_elements(members);
      std::vector<Element> witnesses(minimal.begin(), minimal.begin() + std::min<std::size_t>(2, minimal.size()));
      return Certificate::failed("regular", witnesses, "level set of " + to_string(level) + " has no least element",
                                 {level});
    }
    cert.dual_table.push_back({level, *least});
  }
  return cert;
}

Certificate certify_regular(const Utility& u) { return certify_regular(u, default_probe_levels(u)); }

Certificate check_isotone(const Utility& u) {
  const auto& p = u.domain();
  for (Element a = 0; a < u.size(); ++a) {
    for (Element b : p.up_set(a)) {
      if (u.evaluate(b) < u.evaluate(a)) {
        return Certificate::failed("isotone", {a, b}, ids(p, {a}) + " <= " + ids(p, {b}) + " but the value drops");
      }
    }
  }
  return Certificate::passed("isotone");
}

Certificate check_property_phi(const Utility& u) {
  const auto& p = u.domain();
  for (Element a = 0; a < u.size(); ++a) {
    for (Element b = a + 1; b < u.size(); ++b) {
      const Rational target = std::min(u.evaluate(a), u.evaluate(b));
      bool found = false;
      for (Element c : p.lower_bounds({a, b})) {
        if (u.evaluate(c) == target) {
          found = true;
          break;
        }
      }
      if (!found) {
        return Certificate::failed("property_phi", {a, b},
                                   "no common lower bound of " + ids(p, {a, b}) + " attains " + to_string(target),
                                   {target});
      }
    }
  }
  return Certificate::passed("property_phi");
}

Certificate check_lower_bounded_level_sets(const Utility& u, const std::vector<Rational>& probes) {
  const auto& p = u.domain();
  for (const auto& level : merged_levels(u, probes)) {
    const auto members = u.level_set(level);
    if (members.empty()) continue;
    if (p.lower_bounds(members).empty()) {
      const auto minimal = p.minimal_elements(members);
      std::vector<Element> witnesses(minimal.begin(), minimal.begin() + std::min<std::size_t>(2, minimal.size()));
      return Certificate::failed("lower_bounded_level_sets", witnesses,
                                 "level set of " + to_string(level) + " has no common lower bound", {level});
    }
  }
  return Certificate::passed("lower_bounded_level_sets");
}

Certificate check_meet_homomorphism(const Utility& u) {
  const auto& p = u.domain();
  const auto* table = p.meet_table();
  if (!table) throw std::invalid_argument("meet-homomorphism check needs an inf-semilattice");
  const std::size_t n = p.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      const Element m = (*table)[a * n + b];
      const Rational expected = std::min(u.evaluate(a), u.evaluate(b));
      if (u.evaluate(m) != expected) {
        return Certificate::failed("meet_homomorphism", {a, b, m},
                                   "u(" + p.id(a) + " ∧ " + p.id(b) + ") = " + to_string(u.evaluate(m)) + " but min is " +
                                       to_string(expected),
                                   {u.evaluate(m), expected});
      }
    }
  }
  return Certificate::passed("meet_homomorphism");
}

Certificate check_characterization_equivalence(const Utility& u) {
  if (!u.domain().is_filtered()) throw std::invalid_argument("characterization equivalence needs a filtered poset");
  const auto probes = default_probe_levels(u);
  const bool ql = certify_quasi_leontief(u).certificate.pass;
  const bool levels_regular = certify_regular(u, probes).pass;
  const bool regular = ql && levels_regular;
  const bool isotone = check_isotone(u).pass;
  const bool phi = check_property_phi(u).pass;
  const bool bounded = check_lower_bounded_level_sets(u, probes).pass;
  const bool algebraic = isotone && phi && bounded;

  Certificate cert = Certificate::passed("characterization_equivalence");
  cert.facets = {{"regular_quasi_leontief", regular},
                 {"isotone", isotone},
                 {"property_phi", phi},
                 {"lower_bounded_level_sets", bounded}};
  bool consistent = regular == algebraic;
  // A quasi-Leontief function on a finite poset is regular: every nonempty
  // upper level set coincides with the level set of an attained value.
  consistent = consistent && ql == levels_regular;
  if (u.domain().is_inf_semilattice()) {
    const bool hom = check_meet_homomorphism(u).pass;
    cert.facets.emplace_back("meet_homomorphism", hom);
    consistent = consistent && hom == regular;
  }
  if (!consistent) {
    cert.pass = false;
    cert.detail = "characterizations disagree";
  }
  return cert;
}

Certificate verify_galois(const Utility& u, const std::vector<DualEntry>& dual_table) {
  const auto& p = u.domain();
  for (const auto& entry : dual_table) {
    for (Element x = 0; x < u.size(); ++x) {
      const bool above = entry.point && p.leq(*entry.point, x);
      const bool reaches = u.evaluate(x) >= entry.level;
      if (above != reaches) {
        std::vector<Element> w{x};
        if (entry.point) w.push_back(*entry.point);
        return Certificate::failed("galois", w,
                                   "at level " + to_string(entry.level) + ", '" + p.id(x) +
                                       (above ? "' is above the dual point but falls short of the level"
                                              : "' reaches the level but is not above the dual point"),
                                   {entry.level});
      }
    }
  }
  return Certificate::passed("galois");
}

}  // namespace qleontief
