#pragma once

#include <cmath>
#include <stdexcept>

namespace qleontief {

/// Comparison policy for real-valued utility levels. Exact scales compare
/// with no slack; tolerant scales treat |a - b| <= tolerance as equality.
class Scale {
 public:
  enum class Kind { exact_rational, tolerant_real };

  static Scale exact() { return Scale(Kind::exact_rational, 0.0); }
  static Scale tolerant(double tolerance) {
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    return Scale(Kind::tolerant_real, tolerance);
  }

  Kind kind() const { return kind_; }
  double tolerance() const { return tolerance_; }

  bool equal(double a, double b) const { return std::abs(a - b) <= tolerance_; }
  bool less_equal(double a, double b) const { return a <= b + tolerance_; }
  bool greater_equal(double a, double b) const { return less_equal(b, a); }

 private:
  Scale(Kind kind, double tolerance) : kind_(kind), tolerance_(tolerance) {}

  Kind kind_;
  double tolerance_;
};

}  // namespace qleontief
