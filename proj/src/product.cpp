#include "qleontief/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace qleontief {
namespace {

std::shared_ptr<const FinitePoset> materialize(const std::vector<FinitePoset>& factors,
                                               const std::vector<std::size_t>& strides,
                                               std::size_t total) {
  const std::size_t n = factors.size();
  std::vector<std::string> ids(total);
  std::vector<Point> coords(total, Point(n));
  for (Element x = 0; x < total; ++x) {
    std::string id = "(";
    for (std::size_t j = 0; j < n; ++j) {
      coords[x][j] = (x / strides[j]) % factors[j].size();
      if (j) id += ",";
      id += factors[j].id(coords[x][j]);
    }
    ids[x] = id + ")";
  }
  Relation leq(total, boost::dynamic_bitset<>(total));
  for (Element a = 0; a < total; ++a) {
    for (Element b = 0; b < total; ++b) {
      bool below = true;
      for (std::size_t j = 0; j < n && below; ++j) below = factors[j].leq(coords[a][j], coords[b][j]);
      leq[a][b] = below;
    }
  }
  // Coordinatewise order of partial orders is a partial order.
  return std::make_shared<const FinitePoset>(FinitePoset::from_relation(std::move(ids), std::move(leq)));
}

}  // namespace

ProductSpace::ProductSpace(std::vector<FinitePoset> factors) : ProductSpace(std::move(factors), {}) {}

ProductSpace::ProductSpace(std::vector<FinitePoset> factors, std::vector<std::vector<Rational>> values) {
  if (factors.empty()) throw std::invalid_argument("product of an empty factor list");
  std::size_t total = 1;
  strides_.assign(factors.size(), 1);
  // Last axis varies fastest so element order is lexicographic in coordinates.
  for (std::size_t j = factors.size(); j-- > 0;) {
    strides_[j] = total;
    total *= factors[j].size();
  }
  poset_ = materialize(factors, strides_, total);
  factors_ = std::make_shared<const std::vector<FinitePoset>>(std::move(factors));
  if (!values.empty()) axis_values_ = std::make_shared<const std::vector<std::vector<Rational>>>(std::move(values));
}

ProductSpace ProductSpace::grid(std::vector<std::vector<Rational>> axes) {
  std::vector<FinitePoset> factors;
  for (auto& axis : axes) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    if (axis.empty()) throw std::invalid_argument("empty grid axis");
    std::vector<std::string> ids;
    for (const auto& v : axis) ids.push_back(to_string(v));
    factors.push_back(FinitePoset::chain(std::move(ids)));
  }
  return ProductSpace(std::move(factors), std::move(axes));
}

ProductSpace ProductSpace::integer_grid(std::size_t arity, std::int64_t max) {
  std::vector<Rational> axis;
  for (std::int64_t v = 0; v <= max; ++v) axis.emplace_back(v);
  return grid(std::vector<std::vector<Rational>>(arity, axis));
}

Point ProductSpace::coords(Element x) const {
  Point out(arity());
  for (std::size_t j = 0; j < arity(); ++j) out[j] = (x / strides_[j]) % factor(j).size();
  return out;
}

Element ProductSpace::coordinate(Element x, std::size_t axis) const {
  return (x / strides_.at(axis)) % factor(axis).size();
}

Element ProductSpace::element(const Point& coords) const {
  if (coords.size() != arity()) throw std::invalid_argument("point arity mismatch");
  Element x = 0;
  for (std::size_t j = 0; j < arity(); ++j) {
    if (coords[j] >= factor(j).size()) throw std::out_of_range("coordinate out of range");
    x += coords[j] * strides_[j];
  }
  return x;
}

Point ProductSpace::erase(const Point& x, std::size_t axis) {
  if (axis >= x.size()) throw std::out_of_range("invalid axis");
  Point out = x;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(axis));
  return out;
}

Point ProductSpace::insert(const Point& rest, std::size_t axis, Element value) {
  if (axis > rest.size()) throw std::out_of_range("invalid axis");
  Point out = rest;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(axis), value);
  return out;
}

Element ProductSpace::with_axis(Element x, std::size_t axis, Element value) const {
  if (axis >= arity()) throw std::out_of_range("invalid axis");
  if (value >= factor(axis).size()) throw std::out_of_range("coordinate out of range");
  const Element current = coordinate(x, axis);
  return x - current * strides_[axis] + value * strides_[axis];
}

const Rational& ProductSpace::value(std::size_t axis, Element v) const {
  if (!axis_values_) throw std::logic_error("product has no numeric axes");
  return axis_values_->at(axis).at(v);
}

std::vector<Rational> ProductSpace::values(Element x) const {
  std::vector<Rational> out;
  const auto c = coords(x);
  for (std::size_t j = 0; j < arity(); ++j) out.push_back(value(j, c[j]));
  return out;
}

std::optional<Element> ProductSpace::find_values(const std::vector<Rational>& labels) const {
  if (!axis_values_) throw std::logic_error("product has no numeric axes");
  if (labels.size() != arity()) return std::nullopt;
  Point c(arity());
  for (std::size_t j = 0; j < arity(); ++j) {
    const auto& axis = (*axis_values_)[j];
    auto it = std::lower_bound(axis.begin(), axis.end(), labels[j]);
    if (it == axis.end() || *it != labels[j]) return std::nullopt;
    c[j] = static_cast<Element>(it - axis.begin());
  }
  return element(c);
}

ElementSet ProductSpace::product_set(const std::vector<ElementSet>& per_axis) const {
  if (per_axis.size() != arity()) throw std::invalid_argument("one set per axis required");
  ElementSet out;
  for (Element x = 0; x < size(); ++x) {
    const auto c = coords(x);
    bool inside = true;
    for (std::size_t j = 0; j < arity() && inside; ++j) {
      inside = std::binary_search(per_axis[j].begin(), per_axis[j].end(), c[j]);
    }
    if (inside) out.push_back(x);
  }
  return out;
}

DownSet DownSet::from_members(const FinitePoset& poset, ElementSet members) {
  members = make_set(std::move(members));
  for (Element x : members) {
    if (x >= poset.size()) throw std::out_of_range("down-set member out of range");
  }
  for (Element x : members) {
    for (Element y : poset.down_set(x)) {
      if (!std::binary_search(members.begin(), members.end(), y)) {
        throw NotComprehensiveError("set is not comprehensive: '" + poset.id(x) + "' is a member but '" +
                                        poset.id(y) + "' below it is not",
                                    x, y);
      }
    }
  }
  auto gens = poset.maximal_elements(members);
  return DownSet(Mode::explicit_members, std::move(members), std::move(gens));
}

DownSet DownSet::from_generators(const FinitePoset& poset, ElementSet generators) {
  generators = make_set(std::move(generators));
  for (Element x : generators) {
    if (x >= poset.size()) throw std::out_of_range("generator out of range");
  }
  auto members = poset.down_closure(generators);
  return DownSet(Mode::generated, std::move(members), std::move(generators));
}

DownSet DownSet::whole(const FinitePoset& poset) { return from_members(poset, poset.all()); }

bool DownSet::contains(Element x) const { return std::binary_search(members_.begin(), members_.end(), x); }

}  // namespace qleontief
