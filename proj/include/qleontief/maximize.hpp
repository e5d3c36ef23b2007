#pragma once

// Maximization over comprehensive subsets and the efficient refinement of a
// maximizer on products of posets.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qleontief/certificate.hpp"
#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

struct ArgmaxResult {
  /// Empty exactly when S is empty.
  std::optional<Rational> value;
  ElementSet maximizers;
  /// Largest element of S ∩ E(u; X); lower bound of every maximizer.
  std::optional<Element> largest_efficient;
  /// A maximal element of S attaining the maximum.
  std::optional<Element> maximal_maximizer;
};

/// u must be certified. Throws NotComprehensiveError if S is not a down-set
/// of the domain of u.
ArgmaxResult argmax_over_downset(const Utility& u, const ElementSet& subset);
ArgmaxResult argmax_over_downset(const Utility& u, const DownSet& subset);

/// Maximizes over down(G) by evaluating only G. Throws std::invalid_argument
/// for an empty generator list.
ArgmaxResult argmax_via_generators(const Utility& u, const ElementSet& generators);

/// Maximal element of S in argmax, ties broken by element id. Throws
/// std::invalid_argument for an empty S.
Element maximal_argmax(const Utility& u, const ElementSet& subset);

/// Compares the three nonemptiness readings
///   argmax(u; S), argmax(u; up(x0) ∩ S) for some x0, argmax(u; up(u°(x)) ∩ S) for all x,
/// the largest fixed point of u° on S, and up(argmax) ∩ S = argmax. Facets
/// a, b, c, fixed_point, upward_closed.
Certificate check_argmax_localization(const Utility& u, const ElementSet& subset);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RefinementStep {
  std::size_t axis;
  Element from;
  Element to;
  /// The point after this step.
  Element point;
};

struct RefinementChecks {
  bool argmax = false;
  bool dominated = false;
  bool efficient = false;
  /// Per-step invariants: stays in argmax, fixed coordinates efficient in
  /// their factor set, dominated by the start.
  bool invariants = false;
  bool all() const { return argmax && dominated && efficient && invariants; }
};

struct RefinementTrace {
  Element start;
  std::vector<RefinementStep> steps;
  Element result;
  RefinementChecks checks;
  /// First violated check, if any.
  std::string failure;
  /// For a globally certified u: the largest efficient point of the product
  /// set, reported for comparison only.
  std::optional<Element> global_largest_efficient;
};

/// Refines a maximizer over the product of down-sets S_i into an efficient
/// maximizer below it, replacing one coordinate at a time along `order`
/// (0-based permutation of the axes; identity when empty). Every partial
/// must be quasi-Leontief. Throws PreconditionError when start is not a
/// maximizer over the product.
RefinementTrace efficient_refinement(const ProductSpace& space, const Utility& u, const std::vector<DownSet>& sets,
                                     Element start, std::vector<std::size_t> order = {});

nlohmann::json to_json(const RefinementTrace& trace, const ProductSpace& space);
nlohmann::json to_json(const ArgmaxResult& result, const FinitePoset& domain);

}  // namespace qleontief
