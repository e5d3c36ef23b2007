#pragma once

// Tabulated utility functions on finite posets with their dual, interior and
// closure maps.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qleontief/order.hpp"
#include "qleontief/rational.hpp"

namespace qleontief {

class NotCertifiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a nonempty upper level set has no least element. Carries two
/// distinct minimal elements of that level set.
class NonRegularLevelError : public std::runtime_error {
 public:
  NonRegularLevelError(const std::string& what, Rational level, Element first, Element second)
      : std::runtime_error(what), level_(level), first_(first), second_(second) {}
  const Rational& level() const { return level_; }
  Element first() const { return first_; }
  Element second() const { return second_; }

 private:
  Rational level_;
  Element first_;
  Element second_;
};

namespace detail {
struct CertificationAccess;
}

/// A map from a finite poset to exact rationals. The interior map is
/// available only after certification; the dual map is computed either
/// through a structural rule attached by a combinator or by enumeration.
class Utility {
 public:
  using DualRule = std::function<std::optional<Element>(const Rational&)>;

  /// Throws std::invalid_argument unless there is exactly one value per
  /// element.
  Utility(std::shared_ptr<const FinitePoset> domain, std::vector<Rational> values);
  static Utility from_function(std::shared_ptr<const FinitePoset> domain,
                               const std::function<Rational(Element)>& fn);

  const FinitePoset& domain() const { return *domain_; }
  std::shared_ptr<const FinitePoset> domain_ptr() const { return domain_; }
  std::size_t size() const { return values_.size(); }

  /// Throws std::out_of_range for an element outside the domain.
  const Rational& evaluate(Element x) const { return values_.at(x); }
  const Rational& operator()(Element x) const { return evaluate(x); }
  const std::vector<Rational>& values() const { return values_; }
  /// Sorted distinct values u(X).
  std::vector<Rational> image() const;
  const Rational& max_value() const;

  /// u^{-1}(up(level)).
  ElementSet level_set(const Rational& level) const;

  bool certified() const { return interior_ != nullptr; }
  /// Least element of the upper level set of u(x). Throws NotCertifiedError
  /// unless the utility carries a certificate.
  Element interior(Element x) const;
  const std::vector<Element>& interior_table() const;

  /// Least element of u^{-1}(up(level)); nullopt when that set is empty.
  /// Throws NonRegularLevelError when it is nonempty but has no least element.
  std::optional<Element> dual(const Rational& level) const;
  /// Same as dual() but always by enumeration, ignoring any structural rule.
  std::optional<Element> dual_by_enumeration(const Rational& level) const;
  bool has_structural_dual() const { return static_cast<bool>(dual_rule_); }

  /// u(dual(level)). Throws std::domain_error for a level above max u, where
  /// the dual is undefined.
  Rational closure_map(const Rational& level) const;

  /// Copy with a structural dual rule attached; used by combinators whose
  /// dual map has a closed form in terms of their inputs.
  Utility with_dual_rule(DualRule rule) const;

 private:
  friend struct detail::CertificationAccess;

  std::shared_ptr<const FinitePoset> domain_;
  std::vector<Rational> values_;
  std::shared_ptr<const std::vector<Element>> interior_;
  DualRule dual_rule_;
};

namespace detail {
/// Attaches a verified interior table. Reserved for certifiers.
struct CertificationAccess {
  static Utility attach(const Utility& u, std::vector<Element> interior) {
    Utility out = u;
    out.interior_ = std::make_shared<const std::vector<Element>>(std::move(interior));
    return out;
  }
};
}  // namespace detail

}  // namespace qleontief
