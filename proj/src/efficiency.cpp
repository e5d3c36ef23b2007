#include "qleontief/efficiency.hpp"

#include <algorithm>

#include "qleontief/oracle.hpp"
#include "qleontief/random.hpp"

namespace qleontief {

EfficiencySet efficient_set(const Utility& u, const ElementSet& subset) {
  EfficiencySet out;
  for (Element x : subset) {
    if (u.interior(x) == x) out.points.push_back(x);
  }
  const auto& p = u.domain();
  if (!p.is_chain(out.points)) throw std::logic_error("efficient points of a certified utility are not a chain");
  std::sort(out.points.begin(), out.points.end(), [&](Element a, Element b) { return p.less(a, b); });
  return out;
}

EfficiencySet efficient_set(const Utility& u) { return efficient_set(u, u.domain().all()); }

bool is_efficient_global(const Utility& u, Element x) { return u.interior(x) == x; }

bool level_set_identity(const Utility& u, Element x) {
  return u.domain().up_set(x) == u.level_set(u.evaluate(x));
}

PartialUtility partial_utility(const ProductSpace& space, const Utility& u, const Point& frozen, std::size_t axis) {
  if (axis >= space.arity()) throw std::out_of_range("invalid axis " + std::to_string(axis));
  if (frozen.size() + 1 != space.arity()) throw std::invalid_argument("frozen coordinates have the wrong arity");
  auto domain = std::make_shared<const FinitePoset>(space.factor(axis));
  std::vector<Element> points(domain->size());
  for (Element t = 0; t < domain->size(); ++t) points[t] = space.element(ProductSpace::insert(frozen, axis, t));
  Utility partial = Utility::from_function(domain, [&](Element t) { return u.evaluate(points[t]); });
  if (u.certified()) {
    std::vector<Element> interior(domain->size());
    for (Element t = 0; t < domain->size(); ++t) interior[t] = space.coordinate(u.interior(points[t]), axis);
    partial = detail::CertificationAccess::attach(partial, std::move(interior));
  }
  return PartialUtility{axis, frozen, std::move(partial)};
}

PartialUtility partial_utility_at(const ProductSpace& space, const Utility& u, Element x, std::size_t axis) {
  return partial_utility(space, u, ProductSpace::erase(space.coords(x), axis), axis);
}

Utility certified_partial(const ProductSpace& space, const Utility& u, Element x, std::size_t axis) {
  auto partial = partial_utility_at(space, u, x, axis);
  if (partial.utility.certified()) return partial.utility;
  return certify(partial.utility);
}

Certificate certify_individually(const ProductSpace& space, const Utility& u) {
  for (std::size_t axis = 0; axis < space.arity(); ++axis) {
    for (Element x = 0; x < space.size(); ++x) {
      if (space.coordinate(x, axis) != 0) continue;  // one representative per x_{-j}
      auto partial = partial_utility_at(space, u, x, axis);
      auto result = certify_quasi_leontief(partial.utility);
      if (!result.certificate.pass) {
        std::vector<Element> w;
        for (Element t : result.certificate.witnesses) w.push_back(space.with_axis(x, axis, t));
        return Certificate::failed("individually_quasi_leontief", w,
                                   "partial along axis " + std::to_string(axis + 1) + " through '" +
                                       space.poset().id(x) + "' is not quasi-Leontief",
                                   result.certificate.levels);
      }
    }
  }
  return Certificate::passed("individually_quasi_leontief");
}

bool PartialDualCache::record(std::size_t axis, const Rational& level, Element point) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.emplace(std::make_pair(axis, level), point);
  return inserted || it->second == point;
}

std::optional<Element> PartialDualCache::lookup(std::size_t axis, const Rational& level) const {
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find({axis, level}); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::size_t PartialDualCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

Certificate partial_dual_consistency(const ProductSpace& space, const Utility& u, const Rational& level,
                                     const Point& frozen_a, const Point& frozen_b, std::size_t axis,
                                     PartialDualCache* cache) {
  if (!u.certified()) throw NotCertifiedError("partial dual consistency needs a globally certified utility");
  Certificate cert = Certificate::passed("partial_dual_consistency");
  const auto pa = partial_utility(space, u, frozen_a, axis);
  const auto pb = partial_utility(space, u, frozen_b, axis);
  const auto da = pa.utility.dual_by_enumeration(level);
  const auto db = pb.utility.dual_by_enumeration(level);
  if (!da || !db) {
    cert.facets.emplace_back("applicable", false);
    cert.detail = "a partial level set is empty";
    return cert;
  }
  cert.facets.emplace_back("applicable", true);
  const auto global = u.dual(level);
  const Element projection = space.coordinate(global.value(), axis);
  if (*da != projection || *db != projection) {
    const Element wa = space.element(ProductSpace::insert(frozen_a, axis, *da));
    const Element wb = space.element(ProductSpace::insert(frozen_b, axis, *db));
    return Certificate::failed("partial_dual_consistency", {wa, wb, *global},
                               "partial duals differ from the projection of the global dual", {level});
  }
  if (cache && !cache->record(axis, level, projection)) {
    return Certificate::failed("partial_dual_consistency", {*global}, "cached partial dual disagrees", {level});
  }
  return cert;
}

bool AxisEfficiency::contains_point() const {
  return std::all_of(membership.begin(), membership.end(), [](bool b) { return b; });
}

AxisEfficiency pu_map(const ProductSpace& space, const Utility& u, Element x) {
  AxisEfficiency out;
  const auto c = space.coords(x);
  for (std::size_t axis = 0; axis < space.arity(); ++axis) {
    const Utility partial = certified_partial(space, u, x, axis);
    ElementSet efficient;
    for (Element t = 0; t < partial.size(); ++t) {
      if (partial.interior(t) == t) efficient.push_back(t);
    }
    out.membership.push_back(std::binary_search(efficient.begin(), efficient.end(), c[axis]));
    out.per_axis.push_back(std::move(efficient));
  }
  return out;
}

std::optional<Element> efficiency_witness(const Utility& u, Element x) {
  const auto& p = u.domain();
  const auto& value = u.evaluate(x);
  for (Element y : p.down_set(x)) {
    if (y != x && u.evaluate(y) >= value) return y;
  }
  return std::nullopt;
}

bool is_efficient_minimal(const Utility& u, Element x) { return !efficiency_witness(u, x).has_value(); }

ElementSet default_charpar_sample(const ProductSpace& space) {
  constexpr std::size_t limit = 10000;
  if (space.size() <= limit) return space.poset().all();
  CounterRng rng(0x5eed, 0);
  std::vector<Element> picks;
  for (std::size_t i = 0; i < limit; ++i) picks.push_back(rng.below(space.size()));
  return make_set(std::move(picks));
}

Certificate check_charpar(const ProductSpace& space, const Utility& u, const ElementSet& sample) {
  for (Element x : sample) {
    const bool minimal = is_efficient_minimal(u, x);
    const bool fixed = pu_map(space, u, x).contains_point();
    if (minimal != fixed) {
      std::vector<Element> w{x};
      if (auto y = efficiency_witness(u, x)) w.push_back(*y);
      return Certificate::failed("charpar", w,
                                 "'" + space.poset().id(x) + "' is " + (minimal ? "" : "not ") +
                                     "minimal in its level set but " + (fixed ? "lies" : "does not lie") + " in P_u");
    }
  }
  return Certificate::passed("charpar");
}

}  // namespace qleontief
