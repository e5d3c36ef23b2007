#pragma once

// Finite products of posets under the coordinatewise order, and
// downward-closed subsets.

#include <memory>
#include <optional>
#include <vector>

#include "qleontief/order.hpp"
#include "qleontief/rational.hpp"

namespace qleontief {

/// Coordinates of a product point, one factor element per axis. Axes are
/// numbered from 0.
using Point = std::vector<Element>;

class ProductSpace {
 public:
  /// Throws std::invalid_argument for an empty factor list.
  explicit ProductSpace(std::vector<FinitePoset> factors);
  /// Product of numeric chains; each axis is sorted and deduplicated.
  static ProductSpace grid(std::vector<std::vector<Rational>> axes);
  /// {0..max}^arity with integer labels.
  static ProductSpace integer_grid(std::size_t arity, std::int64_t max);

  std::size_t arity() const { return factors_->size(); }
  const FinitePoset& factor(std::size_t axis) const { return factors_->at(axis); }
  const FinitePoset& poset() const { return *poset_; }
  std::shared_ptr<const FinitePoset> poset_ptr() const { return poset_; }
  std::size_t size() const { return poset_->size(); }

  Point coords(Element x) const;
  Element element(const Point& coords) const;
  /// x_{-axis}: the coordinates with `axis` removed.
  static Point erase(const Point& x, std::size_t axis);
  /// (rest; value) with value placed at `axis`.
  static Point insert(const Point& rest, std::size_t axis, Element value);
  Element with_axis(Element x, std::size_t axis, Element value) const;
  Element coordinate(Element x, std::size_t axis) const;

  bool numeric() const { return axis_values_ != nullptr; }
  /// Numeric label of a factor element; throws std::logic_error when the
  /// product was not built from numeric axes.
  const Rational& value(std::size_t axis, Element v) const;
  std::vector<Rational> values(Element x) const;
  /// Finds the grid point with the given labels, if every label is present.
  std::optional<Element> find_values(const std::vector<Rational>& labels) const;

  /// The product set S_1 x ... x S_n as elements of poset().
  ElementSet product_set(const std::vector<ElementSet>& per_axis) const;

 private:
  ProductSpace(std::vector<FinitePoset> factors, std::vector<std::vector<Rational>> values);

  std::shared_ptr<const std::vector<FinitePoset>> factors_;
  std::shared_ptr<const std::vector<std::vector<Rational>>> axis_values_;
  std::shared_ptr<const FinitePoset> poset_;
  std::vector<std::size_t> strides_;
};

class NotComprehensiveError : public std::invalid_argument {
 public:
  NotComprehensiveError(const std::string& what, Element member, Element below)
      : std::invalid_argument(what), member_(member), below_(below) {}
  /// member is in the set, below <= member is not.
  Element member() const { return member_; }
  Element below() const { return below_; }

 private:
  Element member_;
  Element below_;
};

/// A comprehensive (downward-closed) subset of a finite poset.
class DownSet {
 public:
  enum class Mode { explicit_members, generated };

  /// Throws NotComprehensiveError with a witness pair if members is not
  /// downward closed.
  static DownSet from_members(const FinitePoset& poset, ElementSet members);
  /// S = down-closure of the generators.
  static DownSet from_generators(const FinitePoset& poset, ElementSet generators);
  static DownSet whole(const FinitePoset& poset);

  Mode mode() const { return mode_; }
  const ElementSet& members() const { return members_; }
  /// Generators as given, or the maximal members in explicit mode.
  const ElementSet& generators() const { return generators_; }
  bool contains(Element x) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

 private:
  DownSet(Mode mode, ElementSet members, ElementSet generators)
      : mode_(mode), members_(std::move(members)), generators_(std::move(generators)) {}

  Mode mode_;
  ElementSet members_;
  ElementSet generators_;
};

}  // namespace qleontief
