#pragma once

#include <functional>
#include <initializer_list>
#include <memory>
#include <vector>

#include "qleontief/closed_form.hpp"
#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace fx {

using namespace qleontief;

inline ProductSpace grid(std::initializer_list<std::int64_t> maxima) {
  std::vector<std::vector<Rational>> axes;
  for (auto m : maxima) {
    std::vector<Rational> axis;
    for (std::int64_t t = 0; t <= m; ++t) axis.emplace_back(t);
    axes.push_back(std::move(axis));
  }
  return ProductSpace::grid(std::move(axes));
}

inline ProductSpace grid_from(std::vector<std::vector<Rational>> axes) { return ProductSpace::grid(std::move(axes)); }

inline Utility tab(const ProductSpace& space, const std::function<Rational(const std::vector<Rational>&)>& fn) {
  return Utility::from_function(space.poset_ptr(), [&](Element x) { return fn(space.values(x)); });
}

/// The point of a numeric grid with the given coordinate values.
inline Element pt(const ProductSpace& space, std::initializer_list<Rational> values) {
  return space.find_values(std::vector<Rational>(values)).value();
}

inline Utility min_xy(const ProductSpace& space) {
  return tab(space, [](const std::vector<Rational>& v) { return std::min(v[0], v[1]); });
}

inline Utility on(std::shared_ptr<const FinitePoset> p, std::vector<Rational> values) {
  return Utility(std::move(p), std::move(values));
}

inline std::shared_ptr<const FinitePoset> share(FinitePoset p) {
  return std::make_shared<const FinitePoset>(std::move(p));
}

}  // namespace fx
