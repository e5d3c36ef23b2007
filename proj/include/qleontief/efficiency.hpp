#pragma once

// Efficient points of global and individually quasi-Leontief utilities.

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qleontief/certificate.hpp"
#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

struct EfficiencySet {
  enum class Mode { global_chain, minimal_set };
  /// Ascending along the chain in global mode.
  ElementSet points;
  Mode mode = Mode::global_chain;
};

/// E(u; S) = E(u; X) ∩ S for a certified u. Throws std::logic_error if the
/// efficient points fail to form a chain.
EfficiencySet efficient_set(const Utility& u, const ElementSet& subset);
EfficiencySet efficient_set(const Utility& u);

/// interior(x) == x; u must be certified.
bool is_efficient_global(const Utility& u, Element x);
/// up(x) == u^{-1}(up u(x)), by enumeration.
bool level_set_identity(const Utility& u, Element x);

/// u[x_{-j}] as a utility on factor j.
struct PartialUtility {
  std::size_t axis;
  Point frozen;
  Utility utility;
};

/// Builds u[x_{-j}]. When u is certified the partial inherits the interior
/// u[x_{-j}]°(t) = u°((x_{-j}; t))_j; otherwise it is returned uncertified.
PartialUtility partial_utility(const ProductSpace& space, const Utility& u, const Point& frozen, std::size_t axis);
/// Partial along `axis` through the point x.
PartialUtility partial_utility_at(const ProductSpace& space, const Utility& u, Element x, std::size_t axis);
/// Partial certified by its own certificate or inherited from u. Throws
/// CertificationError when the partial is not quasi-Leontief.
Utility certified_partial(const ProductSpace& space, const Utility& u, Element x, std::size_t axis);

/// Certifies every partial u[x_{-j}] for every axis and every x_{-j}.
Certificate certify_individually(const ProductSpace& space, const Utility& u);

/// Shared partial duals keyed by (axis, level). Concurrent writers may store
/// the same value; a different value is reported as an inconsistency.
class PartialDualCache {
 public:
  /// Returns false if a different point is already stored for the key.
  bool record(std::size_t axis, const Rational& level, Element point);
  std::optional<Element> lookup(std::size_t axis, const Rational& level) const;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<std::size_t, Rational>, Element> entries_;
};

/// For a certified u: both partial duals at `level` equal the projection of
/// u♯(level) on `axis`. Passes with an "applicable" facet set to false when a
/// partial level set is empty.
Certificate partial_dual_consistency(const ProductSpace& space, const Utility& u, const Rational& level,
                                     const Point& frozen_a, const Point& frozen_b, std::size_t axis,
                                     PartialDualCache* cache = nullptr);

/// P_u(x): per-axis efficient sets E(u[x_{-i}], X_i) and membership of x_i.
struct AxisEfficiency {
  std::vector<ElementSet> per_axis;
  std::vector<bool> membership;
  bool contains_point() const;
};

/// Throws CertificationError when a partial is not quasi-Leontief.
AxisEfficiency pu_map(const ProductSpace& space, const Utility& u, Element x);

/// Some x' < x with u(x') >= u(x), found by enumeration; nullopt when x is a
/// minimal point of its upper level set. Uses no certificate.
std::optional<Element> efficiency_witness(const Utility& u, Element x);
bool is_efficient_minimal(const Utility& u, Element x);

/// Every point if the product has at most 10^4 points, otherwise 10^4 points
/// drawn with a fixed seed.
ElementSet default_charpar_sample(const ProductSpace& space);

/// For every sampled x: is_efficient_minimal(x) <=> x ∈ P_u(x).
Certificate check_charpar(const ProductSpace& space, const Utility& u, const ElementSet& sample);

}  // namespace qleontief
