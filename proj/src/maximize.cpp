#include "qleontief/maximize.hpp"

#include <algorithm>
#include <numeric>

#include "qleontief/efficiency.hpp"

namespace qleontief {
namespace {

void require_comprehensive(const FinitePoset& p, const ElementSet& s) {
  for (Element x : s) {
    for (Element y : p.down_set(x)) {
      if (!std::binary_search(s.begin(), s.end(), y)) {
        throw NotComprehensiveError("subset is not comprehensive: '" + p.id(y) + "' <= '" + p.id(x) + "'", x, y);
      }
    }
  }
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has_argmax(const Utility& u, const ElementSet& s) {
  for (Element x : s) {
    bool best = true;
    for (Element y : s) best = best && u.evaluate(y) <= u.evaluate(x);
    if (best) return true;
  }
  return false;
}

Element pick_by_id(const FinitePoset& p, const ElementSet& candidates) {
  return *std::min_element(candidates.begin(), candidates.end(),
                           [&](Element a, Element b) { return p.id(a) < p.id(b); });
}

}  // namespace

ArgmaxResult argmax_over_downset(const Utility& u, const ElementSet& subset) {
  const auto& p = u.domain();
  require_comprehensive(p, subset);
  ArgmaxResult out;
  if (subset.empty()) return out;
  Rational best = u.evaluate(subset.front());
  for (Element x : subset) best = std::max(best, u.evaluate(x));
  out.value = best;
  for (Element x : subset) {
    if (u.evaluate(x) == best) out.maximizers.push_back(x);
  }
  ElementSet efficient;
  for (Element x : subset) {
    if (u.interior(x) == x) efficient.push_back(x);
  }
  if (auto g = p.greatest_element(efficient)) out.largest_efficient = *g;
  out.maximal_maximizer = maximal_argmax(u, subset);
  return out;
}

ArgmaxResult argmax_over_downset(const Utility& u, const DownSet& subset) {
  return argmax_over_downset(u, subset.members());
}

ArgmaxResult argmax_via_generators(const Utility& u, const ElementSet& generators) {
  if (generators.empty()) throw std::invalid_argument("generator list is empty");
  const auto& p = u.domain();
  Element arg = generators.front();
  for (Element g : generators) {
    if (u.evaluate(g) > u.evaluate(arg)) arg = g;
  }
  ArgmaxResult out;
  out.value = u.evaluate(arg);
  const ElementSet members = p.down_closure(generators);
  for (Element x : members) {
    if (u.evaluate(x) == *out.value) out.maximizers.push_back(x);
  }
  out.maximal_maximizer = arg;
  if (u.certified()) {
    ElementSet efficient;
    for (Element x : members) {
      if (u.interior(x) == x) efficient.push_back(x);
    }
    if (auto top = p.greatest_element(efficient)) out.largest_efficient = *top;
  }
  return out;
}

Element maximal_argmax(const Utility& u, const ElementSet& subset) {
  if (subset.empty()) throw std::invalid_argument("maximal argmax of an empty set");
  const auto& p = u.domain();
  ElementSet maximal = p.maximal_elements(subset);
  Rational best = u.evaluate(maximal.front());
  for (Element x : maximal) best = std::max(best, u.evaluate(x));
  ElementSet ties;
  for (Element x : maximal) {
    if (u.evaluate(x) == best) ties.push_back(x);
  }
  return pick_by_id(p, ties);
}

Certificate check_argmax_localization(const Utility& u, const ElementSet& subset) {
  const auto& p = u.domain();
  require_comprehensive(p, subset);
  const bool a = has_argmax(u, subset);
  bool b = false;
  for (Element x0 : subset) b = b || has_argmax(u, intersect(p.up_set(x0), subset));
  bool c = true;
  for (Element x : subset) c = c && has_argmax(u, intersect(p.up_set(u.interior(x)), subset));
  ElementSet fixed;
  for (Element x : subset) {
    if (u.interior(x) == x) fixed.push_back(x);
  }
  const bool fp = p.greatest_element(fixed).has_value();
  ElementSet maximizers;
  bool upward = true;
  if (!subset.empty()) {
    Rational best = u.evaluate(subset.front());
    for (Element x : subset) best = std::max(best, u.evaluate(x));
    for (Element x : subset) {
      if (u.evaluate(x) == best) maximizers.push_back(x);
    }
    upward = intersect(p.up_closure(maximizers), subset) == maximizers;
  }
  Certificate cert = Certificate::passed("argmax_localization");
  cert.facets = {{"a", a}, {"b", b}, {"c", c}, {"fixed_point", fp}, {"upward_closed", upward}};
  if (!upward) {
    cert.pass = false;
    cert.detail = "argmax is not upward closed within S";
    return cert;
  }
  if (a != b || a != c || a != fp) {
    cert.pass = false;
    cert.detail = "nonemptiness readings disagree";
  }
  return cert;
}

RefinementTrace efficient_refinement(const ProductSpace& space, const Utility& u, const std::vector<DownSet>& sets,
                                     Element start, std::vector<std::size_t> order) {
  const std::size_t n = space.arity();
  if (sets.size() != n) throw PreconditionError("expected one down-set per factor");
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted.size() != n || sorted[i] != i) throw PreconditionError("axis order is not a permutation");
    }
  }
  std::vector<ElementSet> per_axis;
  for (const auto& s : sets) per_axis.push_back(s.members());
  const ElementSet product = space.product_set(per_axis);
  if (!std::binary_search(product.begin(), product.end(), start)) {
    throw PreconditionError("start point '" + space.poset().id(start) + "' is not in the product set");
  }
  for (Element x : product) {
    if (u.evaluate(x) > u.evaluate(start)) {
      throw PreconditionError("start point '" + space.poset().id(start) + "' is not a maximizer: '" +
                              space.poset().id(x) + "' does better");
    }
  }

  const auto& p = space.poset();
  const Rational best = u.evaluate(start);
  RefinementTrace trace{start, {}, start, {}, {}, std::nullopt};
  trace.checks.invariants = true;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && trace.failure.empty()) trace.failure = why;
    flag = false;
  };
  const auto start_coords = space.coords(start);
  Element x = start;
  std::vector<std::size_t> fixed;
  for (std::size_t axis : order) {
    const Utility partial = certified_partial(space, u, x, axis);
    const Element from = space.coordinate(x, axis);
    const Element to = partial.interior(start_coords[axis]);
    x = space.with_axis(x, axis, to);
    fixed.push_back(axis);
    trace.steps.push_back({axis, from, to, x});

    const std::string at = " after axis " + std::to_string(axis + 1);
    if (u.evaluate(x) != best || !std::binary_search(product.begin(), product.end(), x)) {
      fail(trace.checks.invariants, "left the argmax" + at);
    }
    for (std::size_t i : fixed) {
      const Utility pi = certified_partial(space, u, x, i);
      const Element xi = space.coordinate(x, i);
      if (pi.interior(xi) != xi || !sets[i].contains(xi)) {
        fail(trace.checks.invariants, "coordinate " + std::to_string(i + 1) + " not efficient" + at);
      }
    }
    if (!p.leq(x, start)) fail(trace.checks.invariants, "not dominated by the start" + at);
  }
  trace.result = x;
  trace.checks.argmax = u.evaluate(x) == best && std::binary_search(product.begin(), product.end(), x);
  trace.checks.dominated = p.leq(x, start);
  trace.checks.efficient = is_efficient_minimal(u, x);
  if (trace.failure.empty()) {
    if (!trace.checks.argmax) trace.failure = "result is not a maximizer";
    else if (!trace.checks.dominated) trace.failure = "result is not below the start";
    else if (!trace.checks.efficient) trace.failure = "result is not efficient";
  }
  if (u.certified()) {
    ElementSet efficient;
    for (Element y : product) {
      if (u.interior(y) == y) efficient.push_back(y);
    }
    trace.global_largest_efficient = p.greatest_element(efficient);
  }
  return trace;
}

nlohmann::json to_json(const RefinementTrace& trace, const ProductSpace& space) {
  const auto& domain = space.poset();
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    const auto& factor = space.factor(s.axis);
    steps.push_back({{"axis", s.axis + 1},
                     {"from", factor.id(s.from)},
                     {"to", factor.id(s.to)},
                     {"point", domain.id(s.point)}});
  }
  nlohmann::json out{{"start", domain.id(trace.start)},
                     {"steps", std::move(steps)},
                     {"result", domain.id(trace.result)},
                     {"checks",
                      {{"argmax", trace.checks.argmax},
                       {"dominated", trace.checks.dominated},
                       {"efficient", trace.checks.efficient},
                       {"invariants", trace.checks.invariants}}}};
  if (!trace.failure.empty()) out["failure"] = trace.failure;
  if (trace.global_largest_efficient) {
    out["global_largest_efficient"] = domain.id(*trace.global_largest_efficient);
    out["matches_global"] = *trace.global_largest_efficient == trace.result;
  }
  return out;
}

nlohmann::json to_json(const ArgmaxResult& result, const FinitePoset& domain) {
  nlohmann::json ids = nlohmann::json::array();
  for (Element x : result.maximizers) ids.push_back(domain.id(x));
  auto id_or_null = [&](const std::optional<Element>& e) -> nlohmann::json {
    return e ? nlohmann::json(domain.id(*e)) : nlohmann::json(nullptr);
  };
  return {{"value", result.value ? nlohmann::json(to_string(*result.value)) : nlohmann::json(nullptr)},
          {"maximizers", std::move(ids)},
          {"largest_efficient", id_or_null(result.largest_efficient)},
          {"maximal_maximizer", id_or_null(result.maximal_maximizer)}};
}

}  // namespace qleontief
