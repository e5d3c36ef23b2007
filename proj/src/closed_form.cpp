#include "qleontief/closed_form.hpp"

namespace qleontief {

Utility tabulate(const ClassicalLeontief<Rational>& form, const ProductSpace& grid) {
  if (grid.arity() != form.dimension()) throw std::invalid_argument("grid arity does not match coefficients");
  return Utility::from_function(grid.poset_ptr(), [&](Element x) { return form.evaluate(grid.values(x)); });
}

ElementSet efficiency_locus(const ClassicalLeontief<Rational>& form, const ProductSpace& grid) {
  ElementSet out;
  for (Element x = 0; x < grid.size(); ++x) {
    if (form.on_efficiency_locus(grid.values(x))) out.push_back(x);
  }
  return out;
}

PowerLeontief::PowerLeontief(std::vector<double> a, std::vector<double> alpha, std::optional<Box<double>> box)
    : a_(std::move(a)), alpha_(std::move(alpha)), box_(std::move(box)) {
  if (a_.empty() || a_.size() != alpha_.size()) throw std::invalid_argument("power Leontief parameter mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(a_[i] > 0.0) || !(alpha_[i] > 0.0)) {
      throw std::invalid_argument("power Leontief coefficients and exponents must be positive");
    }
  }
  if (box_) {
    if (box_->dimension() != a_.size()) throw std::invalid_argument("box dimension mismatch");
    for (double lo : box_->lo) {
      if (lo < 0.0) throw std::invalid_argument("power Leontief domain must lie in the nonnegative orthant");
    }
  }
}

void PowerLeontief::check(const std::vector<double>& x) const {
  if (x.size() != a_.size()) throw OutsideDomainError("point dimension mismatch");
  for (double xi : x) {
    if (xi < 0.0) throw OutsideDomainError("power Leontief is defined on the nonnegative orthant");
  }
  if (box_ && !box_->contains(x)) throw OutsideDomainError("point outside the utility's box");
}

double PowerLeontief::evaluate(const std::vector<double>& x) const {
  check(x);
  double m = a_[0] * std::pow(x[0], alpha_[0]);
  for (std::size_t i = 1; i < a_.size(); ++i) m = std::min(m, a_[i] * std::pow(x[i], alpha_[i]));
  return m;
}

std::vector<double> PowerLeontief::dual(double level) const {
  if (level < 0.0) throw std::domain_error("power Leontief levels are nonnegative");
  std::vector<double> out(a_.size());
  for (std::size_t j = 0; j < a_.size(); ++j) out[j] = std::pow(level / a_[j], 1.0 / alpha_[j]);
  return out;
}

bool PowerLeontief::on_efficiency_locus(const std::vector<double>& x, const Scale& scale) const {
  check(x);
  const double first = a_[0] * std::pow(x[0], alpha_[0]);
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (!scale.equal(a_[i] * std::pow(x[i], alpha_[i]), first)) return false;
  }
  return true;
}

PriceMatrixLeontief::PriceMatrixLeontief(Eigen::MatrixXd prices) : prices_(std::move(prices)) {
  if (prices_.rows() == 0 || prices_.rows() != prices_.cols()) {
    throw std::invalid_argument("price matrix must be square and nonempty");
  }
  if ((prices_.array() < 0.0).any()) throw std::invalid_argument("price matrix entries must be nonnegative");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(prices_);
  if (!lu.isInvertible()) throw std::invalid_argument("price rows are linearly dependent");
  unit_bundle_ = lu.solve(Eigen::VectorXd::Ones(prices_.rows()));
}

double PriceMatrixLeontief::evaluate(const Eigen::VectorXd& x) const {
  if (x.size() != prices_.cols()) throw OutsideDomainError("point dimension mismatch");
  return (prices_ * x).minCoeff();
}

bool PriceMatrixLeontief::geq(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Scale& scale) const {
  const Eigen::VectorXd px = prices_ * x;
  const Eigen::VectorXd py = prices_ * y;
  for (Eigen::Index i = 0; i < px.size(); ++i) {
    if (!scale.greater_equal(px[i], py[i])) return false;
  }
  return true;
}

}  // namespace qleontief
