#pragma once

// Closed-form members of the Leontief family: min_i a_i x_i, its power
// variant, price-matrix utilities, and positive affine transforms.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qleontief/product.hpp"
#include "qleontief/rational.hpp"
#include "qleontief/scale.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

class OutsideDomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Product of closed intervals [lo_i, hi_i].
template <class Scalar>
struct Box {
  std::vector<Scalar> lo;
  std::vector<Scalar> hi;

  std::size_t dimension() const { return lo.size(); }
  bool contains(const std::vector<Scalar>& x) const {
    if (x.size() != lo.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    }
    return true;
  }
  static Box cube(std::size_t n, Scalar lo, Scalar hi) {
    return Box{std::vector<Scalar>(n, lo), std::vector<Scalar>(n, hi)};
  }
};

/// u(x) = min_i a_i x_i with every a_i > 0.
template <class Scalar>
class ClassicalLeontief {
 public:
  explicit ClassicalLeontief(std::vector<Scalar> a, std::optional<Box<Scalar>> box = std::nullopt)
      : a_(std::move(a)), box_(std::move(box)) {
    if (a_.empty()) throw std::invalid_argument("classical Leontief needs at least one coefficient");
    for (const auto& ai : a_) {
      if (!(ai > Scalar(0))) throw std::invalid_argument("classical Leontief coefficients must be positive");
    }
    if (box_ && box_->dimension() != a_.size()) throw std::invalid_argument("box dimension mismatch");
  }

  std::size_t dimension() const { return a_.size(); }
  const std::vector<Scalar>& coefficients() const { return a_; }
  const std::optional<Box<Scalar>>& box() const { return box_; }

  Scalar evaluate(const std::vector<Scalar>& x) const {
    check(x);
    Scalar m = a_[0] * x[0];
    for (std::size_t i = 1; i < a_.size(); ++i) m = std::min(m, a_[i] * x[i]);
    return m;
  }

  /// x°_j = (min_i a_i x_i) / a_j.
  std::vector<Scalar> interior(const std::vector<Scalar>& x) const { return dual(evaluate(x)); }

  /// (level / a_1, ..., level / a_n).
  std::vector<Scalar> dual(const Scalar& level) const {
    std::vector<Scalar> out(a_.size());
    for (std::size_t j = 0; j < a_.size(); ++j) out[j] = level / a_[j];
    return out;
  }

  /// a_i x_i = a_j x_j for all i, j.
  bool on_efficiency_locus(const std::vector<Scalar>& x, const Scale& scale = Scale::exact()) const {
    check(x);
    for (std::size_t i = 1; i < a_.size(); ++i) {
      if (!equal(a_[i] * x[i], a_[0] * x[0], scale)) return false;
    }
    return true;
  }

 private:
  void check(const std::vector<Scalar>& x) const {
    if (x.size() != a_.size()) throw OutsideDomainError("point dimension mismatch");
    if (box_ && !box_->contains(x)) throw OutsideDomainError("point outside the utility's box");
  }
  static bool equal(const Scalar& a, const Scalar& b, const Scale& scale) {
    if constexpr (std::is_floating_point_v<Scalar>) {
      return scale.equal(a, b);
    } else {
      return a == b;
    }
  }

  std::vector<Scalar> a_;
  std::optional<Box<Scalar>> box_;
};

/// Tabulates an exact classical Leontief utility on a numeric grid.
Utility tabulate(const ClassicalLeontief<Rational>& form, const ProductSpace& grid);

/// Grid points on the closed-form locus a_i x_i = a_j x_j. On a grid this can
/// be smaller than the efficient set of the tabulated utility, whose level
/// sets only see grid points.
ElementSet efficiency_locus(const ClassicalLeontief<Rational>& form, const ProductSpace& grid);

/// u(x) = min_i a_i x_i^{alpha_i} on a subset of the nonnegative orthant.
class PowerLeontief {
 public:
  PowerLeontief(std::vector<double> a, std::vector<double> alpha, std::optional<Box<double>> box = std::nullopt);

  std::size_t dimension() const { return a_.size(); }
  const std::vector<double>& coefficients() const { return a_; }
  const std::vector<double>& exponents() const { return alpha_; }

  double evaluate(const std::vector<double>& x) const;
  /// x°_j = (min_i a_i x_i^{alpha_i} / a_j)^{1 / alpha_j}.
  std::vector<double> interior(const std::vector<double>& x) const { return dual(evaluate(x)); }
  std::vector<double> dual(double level) const;
  bool on_efficiency_locus(const std::vector<double>& x, const Scale& scale) const;

 private:
  void check(const std::vector<double>& x) const;

  std::vector<double> a_;
  std::vector<double> alpha_;
  std::optional<Box<double>> box_;
};

/// u(x) = min_i p_i . x over R^n ordered by x >=_P y <=> P x >= P y.
class PriceMatrixLeontief {
 public:
  /// Throws std::invalid_argument for a negative entry or a singular matrix.
  explicit PriceMatrixLeontief(Eigen::MatrixXd prices);

  std::size_t dimension() const { return static_cast<std::size_t>(prices_.rows()); }
  const Eigen::MatrixXd& prices() const { return prices_; }
  /// The unique x_P with P x_P = 1_n.
  const Eigen::VectorXd& unit_bundle() const { return unit_bundle_; }

  double evaluate(const Eigen::VectorXd& x) const;
  /// u(x) x_P.
  Eigen::VectorXd interior(const Eigen::VectorXd& x) const { return dual(evaluate(x)); }
  /// level x_P.
  Eigen::VectorXd dual(double level) const { return level * unit_bundle_; }
  /// x >=_P y.
  bool geq(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Scale& scale) const;

 private:
  Eigen::MatrixXd prices_;
  Eigen::VectorXd unit_bundle_;
};

/// v = scale * base + shift with scale > 0; the interior map of v is the
/// interior map of base.
template <class Base>
class AffineLeontief {
 public:
  AffineLeontief(Base base, double scale, double shift) : base_(std::move(base)), scale_(scale), shift_(shift) {
    if (!(scale_ > 0.0)) throw std::invalid_argument("affine transform needs a positive scale");
  }

  template <class Point>
  double evaluate(const Point& x) const {
    return scale_ * base_.evaluate(x) + shift_;
  }
  template <class Point>
  auto interior(const Point& x) const {
    return base_.interior(x);
  }
  auto dual(double level) const { return base_.dual((level - shift_) / scale_); }
  const Base& base() const { return base_; }

 private:
  Base base_;
  double scale_;
  double shift_;
};

}  // namespace qleontief
