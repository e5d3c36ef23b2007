#pragma once

// Operations that build new quasi-Leontief utilities from existing ones, and
// the two decomposition results for utilities on products.

#include <functional>
#include <optional>
#include <vector>

#include "qleontief/closed_form.hpp"
#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

/// v = scale * u + shift. Throws std::invalid_argument unless scale > 0.
Utility affine_transform(const Utility& u, const Rational& scale, const Rational& shift);

struct ProductUtility {
  ProductSpace space;
  Utility utility;
};

/// u(x_1..x_n) = min_i u_i(x_i) on the product of the factor domains, with
/// dual (u_1♯(λ), ..., u_n♯(λ)). Every factor must be certified.
ProductUtility min_product(const std::vector<Utility>& factors);

/// u(x) = min_i u_i(x) on a shared domain, with dual u_1♯(λ) ∨ ... ∨ u_n♯(λ).
/// Every input must be certified. Throws std::domain_error when a join needed
/// by one of the levels u_i(X) does not exist.
Utility min_pointwise(const std::vector<Utility>& parts);

/// u restricted to S. Element i of the result's domain is S.members()[i].
/// Throws NotCertifiedError if u is uncertified.
Utility restrict(const Utility& u, const DownSet& subset);

class NotUpperBoundError : public std::invalid_argument {
 public:
  NotUpperBoundError(const std::string& what, Element member)
      : std::invalid_argument(what), member_(member) {}
  Element member() const { return member_; }

 private:
  Element member_;
};

struct MinDecomposition {
  /// u_i(t) = u(x̄ with coordinate i replaced by t).
  std::vector<Utility> factors;
  /// First member of S where u(x) != min_i u_i(x_i), if any.
  std::optional<Element> violation;
  bool exact() const { return !violation.has_value(); }
};

/// Freezes all but one coordinate at the upper bound x̄ of S. Throws
/// NotUpperBoundError when some member of S is not below x̄.
MinDecomposition min_decompose(const ProductSpace& space, const Utility& u, const ElementSet& subset,
                               Element upper);

class RecoveryError : public std::runtime_error {
 public:
  enum class Kind { homogeneity, min_form };
  RecoveryError(const std::string& what, Kind kind, std::vector<double> probe, double expected, double actual)
      : std::runtime_error(what), kind_(kind), probe_(std::move(probe)), expected_(expected), actual_(actual) {}
  Kind kind() const { return kind_; }
  const std::vector<double>& probe() const { return probe_; }
  double expected() const { return expected_; }
  double actual() const { return actual_; }

 private:
  Kind kind_;
  std::vector<double> probe_;
  double expected_;
  double actual_;
};

struct RecoveryOptions {
  std::vector<double> multipliers{0.25, 0.5, 0.75};
  double relative_tolerance = 1e-9;
};

/// Reads a_i = u(x̄ with coordinate i set to 1) where x̄ is the box's upper
/// corner, then checks homogeneity u(t x) = t u(x) and the identity
/// u(x) = min_i a_i x_i on every probe. The box must contain 1 on each axis.
std::vector<double> recover_leontief_coefficients(const std::function<double(const std::vector<double>&)>& u,
                                                  const Box<double>& box,
                                                  const std::vector<std::vector<double>>& probes,
                                                  const RecoveryOptions& options = {});

/// Probe grid with `per_axis` evenly spaced points on each axis of the box.
std::vector<std::vector<double>> box_probes(const Box<double>& box, std::size_t per_axis);

}  // namespace qleontief
