#pragma once

// Brute-force reference computations for the tests. Only the raw order
// relation and raw utility values are used; nothing here calls the
// library's least-element, certification or efficiency code.

#include <optional>
#include <vector>

#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace oracle {

using qleontief::Element;
using qleontief::FinitePoset;
using qleontief::Rational;
using qleontief::Utility;

inline bool leq(const FinitePoset& p, Element a, Element b) { return p.relation()[a].test(b); }

inline std::vector<Element> level_set(const Utility& u, const Rational& level) {
  std::vector<Element> out;
  for (Element x = 0; x < u.size(); ++x) {
    if (u.values()[x] >= level) out.push_back(x);
  }
  return out;
}

inline std::optional<Element> least(const FinitePoset& p, const std::vector<Element>& set) {
  for (Element c : set) {
    bool below_all = true;
    for (Element t : set) below_all = below_all && leq(p, c, t);
    if (below_all) return c;
  }
  return std::nullopt;
}

inline std::vector<Element> minimal(const FinitePoset& p, const std::vector<Element>& set) {
  std::vector<Element> out;
  for (Element c : set) {
    bool is_min = true;
    for (Element t : set) is_min = is_min && (t == c || !leq(p, t, c));
    if (is_min) out.push_back(c);
  }
  return out;
}

inline std::optional<Element> dual(const Utility& u, const Rational& level) {
  return least(u.domain(), level_set(u, level));
}

inline std::optional<Element> interior(const Utility& u, Element x) { return dual(u, u.values()[x]); }

inline bool quasi_leontief(const Utility& u) {
  for (Element x = 0; x < u.size(); ++x) {
    if (!interior(u, x)) return false;
  }
  return true;
}

inline bool isotone(const Utility& u) {
  for (Element a = 0; a < u.size(); ++a) {
    for (Element b = 0; b < u.size(); ++b) {
      if (leq(u.domain(), a, b) && u.values()[a] > u.values()[b]) return false;
    }
  }
  return true;
}

/// No x' != x with x' <= x and u(x') >= u(x).
inline bool minimal_efficient(const Utility& u, Element x) {
  for (Element y = 0; y < u.size(); ++y) {
    if (y != x && leq(u.domain(), y, x) && u.values()[y] >= u.values()[x]) return false;
  }
  return true;
}

inline std::vector<Element> argmax(const Utility& u, const std::vector<Element>& set) {
  std::vector<Element> out;
  for (Element x : set) {
    bool best = true;
    for (Element y : set) best = best && u.values()[y] <= u.values()[x];
    if (best) out.push_back(x);
  }
  return out;
}

/// x_axis is the least element of {t : u(x_{-axis}; t) >= u(x)}.
inline bool axis_efficient(const qleontief::ProductSpace& space, const Utility& u, Element x, std::size_t axis) {
  const auto& factor = space.factor(axis);
  const Element v = space.coordinate(x, axis);
  for (Element t = 0; t < factor.size(); ++t) {
    if (u.values()[space.with_axis(x, axis, t)] >= u.values()[x] && !leq(factor, v, t)) return false;
  }
  return true;
}

}  // namespace oracle
