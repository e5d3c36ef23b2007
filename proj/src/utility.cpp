#include "qleontief/utility.hpp"

#include <algorithm>

namespace qleontief {

Utility::Utility(std::shared_ptr<const FinitePoset> domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_) throw std::invalid_argument("utility without a domain");
  if (values_.size() != domain_->size()) {
    throw std::invalid_argument("utility table has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(domain_->size()) + " elements");
  }
}

Utility Utility::from_function(std::shared_ptr<const FinitePoset> domain,
                               const std::function<Rational(Element)>& fn) {
  std::vector<Rational> values;
  values.reserve(domain->size());
  for (Element x = 0; x < domain->size(); ++x) values.push_back(fn(x));
  return Utility(std::move(domain), std::move(values));
}

std::vector<Rational> Utility::image() const {
  std::vector<Rational> out = values_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const Rational& Utility::max_value() const {
  if (values_.empty()) throw std::domain_error("utility on an empty domain");
  return *std::max_element(values_.begin(), values_.end());
}

ElementSet Utility::level_set(const Rational& level) const {
  ElementSet out;
  for (Element x = 0; x < values_.size(); ++x) {
    if (values_[x] >= level) out.push_back(x);
  }
  return out;
}

Element Utility::interior(Element x) const {
  if (!interior_) throw NotCertifiedError("interior map requested on an uncertified utility");
  return interior_->at(x);
}

const std::vector<Element>& Utility::interior_table() const {
  if (!interior_) throw NotCertifiedError("interior map requested on an uncertified utility");
  return *interior_;
}

std::optional<Element> Utility::dual(const Rational& level) const {
  if (dual_rule_) return dual_rule_(level);
  return dual_by_enumeration(level);
}

std::optional<Element> Utility::dual_by_enumeration(const Rational& level) const {
  const auto members = level_set(level);
  if (members.empty()) return std::nullopt;
  if (auto least = domain_->least_element(members)) return least;
  const auto minimal = domain_->minimal_elements(members);
  Element a = minimal.at(0);
  // A lone minimal element that is not least can only happen in infinite
  // posets; in a finite poset at least two minimal elements exist here.
  Element b = minimal.size() > 1 ? minimal[1] : a;
  throw NonRegularLevelError("level set of " + to_string(level) + " has no least element: '" + domain_->id(a) +
                                 "' and '" + domain_->id(b) + "' are both minimal",
                             level, a, b);
}

Rational Utility::closure_map(const Rational& level) const {
  if (values_.empty() || level > max_value()) {
    throw std::domain_error("level " + to_string(level) + " lies above the range of the utility");
  }
  const auto d = dual(level);
  return values_.at(*d);
}

Utility Utility::with_dual_rule(DualRule rule) const {
  Utility out = *this;
  out.dual_rule_ = std::move(rule);
  return out;
}

}  // namespace qleontief
