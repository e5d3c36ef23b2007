#include "qleontief/combinators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qleontief {
namespace {

void require_certified(const Utility& u, const char* what) {
  if (!u.certified()) throw NotCertifiedError(std::string(what) + " requires certified quasi-Leontief inputs");
}

std::string describe(const std::vector<double>& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x[i];
  out << ")";
  return out.str();
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

Utility affine_transform(const Utility& u, const Rational& scale, const Rational& shift) {
  if (scale <= Rational(0)) throw std::invalid_argument("affine transform needs a positive scale");
  std::vector<Rational> values;
  values.reserve(u.size());
  for (const auto& v : u.values()) values.push_back(scale * v + shift);
  Utility base = u;
  return Utility(u.domain_ptr(), std::move(values)).with_dual_rule([base, scale, shift](const Rational& level) {
    return base.dual((level - shift) / scale);
  });
}

ProductUtility min_product(const std::vector<Utility>& factors) {
  if (factors.empty()) throw std::invalid_argument("min_product of an empty factor list");
  std::vector<FinitePoset> posets;
  for (const auto& f : factors) {
    require_certified(f, "min_product");
    posets.push_back(f.domain());
  }
  ProductSpace space(std::move(posets));
  Utility table = Utility::from_function(space.poset_ptr(), [&](Element x) {
    const auto c = space.coords(x);
    Rational m = factors[0].evaluate(c[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) m = std::min(m, factors[i].evaluate(c[i]));
    return m;
  });
  auto rule = [factors, space](const Rational& level) -> std::optional<Element> {
    Point c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto d = factors[i].dual(level);
      if (!d) return std::nullopt;
      c[i] = *d;
    }
    return space.element(c);
  };
  return ProductUtility{space, table.with_dual_rule(std::move(rule))};
}

Utility min_pointwise(const std::vector<Utility>& parts) {
  if (parts.empty()) throw std::invalid_argument("min_pointwise of an empty list");
  const auto domain = parts[0].domain_ptr();
  for (const auto& p : parts) {
    require_certified(p, "min_pointwise");
    if (p.domain_ptr() != domain) throw std::invalid_argument("min_pointwise needs a shared domain");
  }
  auto rule = [parts, domain](const Rational& level) -> std::optional<Element> {
    std::optional<Element> acc;
    for (const auto& p : parts) {
      auto d = p.dual(level);
      if (!d) return std::nullopt;
      if (!acc) {
        acc = d;
        continue;
      }
      auto j = domain->join(*acc, *d);
      if (!j) {
        throw std::domain_error("join of '" + domain->id(*acc) + "' and '" + domain->id(*d) + "' does not exist");
      }
      acc = j;
    }
    return acc;
  };
  Utility table = Utility::from_function(domain, [&](Element x) {
    Rational m = parts[0].evaluate(x);
    for (const auto& p : parts) m = std::min(m, p.evaluate(x));
    return m;
  });
  // Surface missing joins at construction for every level the inputs attain.
  std::vector<Rational> levels;
  for (const auto& p : parts) {
    auto img = p.image();
    levels.insert(levels.end(), img.begin(), img.end());
  }
  for (const auto& level : levels) rule(level);
  return table.with_dual_rule(std::move(rule));
}

Utility restrict(const Utility& u, const DownSet& subset) {
  require_certified(u, "restrict");
  const auto& members = subset.members();
  for (Element x : members) {
    if (x >= u.size()) throw std::out_of_range("down-set member outside the utility's domain");
  }
  // Re-validate comprehensiveness against this domain.
  if (!u.domain().is_comprehensive(members)) throw std::invalid_argument("restriction set is not comprehensive");
  auto domain = std::make_shared<const FinitePoset>(u.domain().induced(members));
  std::vector<Rational> values;
  for (Element x : members) values.push_back(u.evaluate(x));
  Utility base = u;
  auto rule = [base, members](const Rational& level) -> std::optional<Element> {
    auto d = base.dual(level);
    if (!d) return std::nullopt;
    auto it = std::lower_bound(members.begin(), members.end(), *d);
    if (it == members.end() || *it != *d) return std::nullopt;
    return static_cast<Element>(it - members.begin());
  };
  return Utility(std::move(domain), std::move(values)).with_dual_rule(std::move(rule));
}

MinDecomposition min_decompose(const ProductSpace& space, const Utility& u, const ElementSet& subset,
                               Element upper) {
  if (u.domain_ptr() != space.poset_ptr() && u.size() != space.size()) {
    throw std::invalid_argument("utility is not defined on the given product");
  }
  for (Element s : subset) {
    if (!space.poset().leq(s, upper)) {
      throw NotUpperBoundError("'" + space.poset().id(upper) + "' is not above member '" + space.poset().id(s) + "'",
                               s);
    }
  }
  MinDecomposition out;
  for (std::size_t axis = 0; axis < space.arity(); ++axis) {
    auto domain = std::make_shared<const FinitePoset>(space.factor(axis));
    out.factors.push_back(Utility::from_function(
        domain, [&](Element t) { return u.evaluate(space.with_axis(upper, axis, t)); }));
  }
  for (Element s : subset) {
    const auto c = space.coords(s);
    Rational m = out.factors[0].evaluate(c[0]);
    for (std::size_t i = 1; i < c.size(); ++i) m = std::min(m, out.factors[i].evaluate(c[i]));
    if (m != u.evaluate(s)) {
      out.violation = s;
      break;
    }
  }
  return out;
}

std::vector<double> recover_leontief_coefficients(const std::function<double(const std::vector<double>&)>& u,
                                                  const Box<double>& box,
                                                  const std::vector<std::vector<double>>& probes,
                                                  const RecoveryOptions& options) {
  const std::size_t n = box.dimension();
  std::vector<double> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (box.lo[i] > 1.0 || box.hi[i] < 1.0) throw std::invalid_argument("recovery box must contain 1 on every axis");
    std::vector<double> x = box.hi;
    x[i] = 1.0;
    a[i] = u(x);
  }
  for (const auto& probe : probes) {
    const double value = u(probe);
    for (double t : options.multipliers) {
      std::vector<double> scaled = probe;
      for (double& v : scaled) v *= t;
      if (!box.contains(scaled)) continue;
      const double lhs = u(scaled);
      if (!close(lhs, t * value, options.relative_tolerance)) {
        throw RecoveryError("homogeneity fails at " + describe(probe) + " with multiplier " + std::to_string(t),
                            RecoveryError::Kind::homogeneity, probe, t * value, lhs);
      }
    }
  }
  for (const auto& probe : probes) {
    double m = a[0] * probe[0];
    for (std::size_t i = 1; i < n; ++i) m = std::min(m, a[i] * probe[i]);
    const double value = u(probe);
    if (!close(value, m, options.relative_tolerance)) {
      throw RecoveryError("min-form identity fails at " + describe(probe), RecoveryError::Kind::min_form, probe, m,
                          value);
    }
  }
  return a;
}

std::vector<std::vector<double>> box_probes(const Box<double>& box, std::size_t per_axis) {
  if (per_axis < 2) throw std::invalid_argument("need at least two probes per axis");
  const std::size_t n = box.dimension();
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * static_cast<double>(idx[i]) / static_cast<double>(per_axis - 1);
    }
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < n && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace qleontief
