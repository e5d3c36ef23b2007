#pragma once

// Finite partially ordered sets with a materialized order relation.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace qleontief {

using Element = std::size_t;
/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;
using Relation = std::vector<boost::dynamic_bitset<>>;

enum class OrderAxiom { reflexivity, antisymmetry, transitivity };

std::string_view to_string(OrderAxiom axiom);

struct OrderViolation {
  OrderAxiom axiom;
  /// (x) for reflexivity, (x, y) for antisymmetry, (x, y, z) for transitivity.
  std::vector<Element> witness;
};

struct OrderReport {
  std::optional<OrderViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks the three order axioms on relation[i][j] == (i <= j) and reports the
/// first violation found (scan order: reflexivity, antisymmetry, transitivity).
OrderReport check_partial_order(const Relation& relation);

class PosetError : public std::invalid_argument {
 public:
  PosetError(const std::string& what, OrderReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const OrderReport& report() const { return report_; }

 private:
  OrderReport report_;
};

class FinitePoset {
 public:
  /// Builds the order as the reflexive-transitive closure of the cover pairs
  /// (lower, upper). Throws PosetError when the covers contain a cycle.
  static FinitePoset from_covers(std::vector<std::string> ids,
                                 const std::vector<std::pair<Element, Element>>& covers);
  /// Takes the full relation as given; throws PosetError if it is not a
  /// partial order.
  static FinitePoset from_relation(std::vector<std::string> ids, Relation leq);
  /// Chain 0 < 1 < ... < n-1 with ids "0".."n-1".
  static FinitePoset chain(std::size_t n);
  static FinitePoset chain(std::vector<std::string> ids);
  static FinitePoset antichain(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& id(Element x) const { return ids_.at(x); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Element> find(std::string_view id) const;
  /// Throws std::out_of_range for an unknown id.
  Element index_of(std::string_view id) const;

  bool leq(Element a, Element b) const { return leq_[a][b]; }
  bool less(Element a, Element b) const { return a != b && leq_[a][b]; }
  bool comparable(Element a, Element b) const { return leq_[a][b] || leq_[b][a]; }
  const Relation& relation() const { return leq_; }

  ElementSet all() const;
  ElementSet up_set(Element x) const;
  ElementSet down_set(Element x) const;
  /// up_set(lo) ∩ down_set(hi); empty unless lo <= hi.
  ElementSet interval(Element lo, Element hi) const;
  ElementSet down_closure(const ElementSet& subset) const;
  ElementSet up_closure(const ElementSet& subset) const;

  std::optional<Element> least_element(const ElementSet& subset) const;
  std::optional<Element> greatest_element(const ElementSet& subset) const;
  ElementSet minimal_elements(const ElementSet& subset) const;
  ElementSet maximal_elements(const ElementSet& subset) const;
  /// Elements below every member; the whole poset for the empty set.
  ElementSet lower_bounds(const ElementSet& subset) const;
  ElementSet upper_bounds(const ElementSet& subset) const;

  std::optional<Element> meet(Element a, Element b) const;
  std::optional<Element> join(Element a, Element b) const;
  /// Lazily computed table of meets indexed a * size() + b; null unless every
  /// pair has a meet.
  const std::vector<Element>* meet_table() const;
  bool is_inf_semilattice() const { return meet_table() != nullptr; }

  std::optional<Element> bottom() const { return least_element(all()); }
  std::optional<Element> top() const { return greatest_element(all()); }

  /// The empty set counts as a chain.
  bool is_chain(const ElementSet& subset) const;
  bool is_comprehensive(const ElementSet& subset) const;
  bool is_filtered() const;

  /// Induced sub-poset on subset; element i of the result is subset[i].
  FinitePoset induced(const ElementSet& subset) const;

 private:
  FinitePoset(std::vector<std::string> ids, Relation leq);

  boost::dynamic_bitset<> mask(const ElementSet& subset) const;
  static ElementSet to_set(const boost::dynamic_bitset<>& bits);

  struct MeetCache;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Element> index_;
  Relation leq_;  // leq_[a][b] <=> a <= b
  Relation geq_;  // geq_[a][b] <=> a >= b
  std::shared_ptr<MeetCache> meet_cache_;
};

/// Normalizes an arbitrary list of indices into an ElementSet.
ElementSet make_set(std::vector<Element> elements);

}  // namespace qleontief
