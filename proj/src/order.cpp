#include "qleontief/order.hpp"

#include <algorithm>
#include <mutex>

namespace qleontief {

std::string_view to_string(OrderAxiom axiom) {
  switch (axiom) {
    case OrderAxiom::reflexivity: return "reflexivity";
    case OrderAxiom::antisymmetry: return "antisymmetry";
    case OrderAxiom::transitivity: return "transitivity";
  }
  return "unknown";
}

OrderReport check_partial_order(const Relation& relation) {
  const std::size_t n = relation.size();
  for (Element x = 0; x < n; ++x) {
    if (relation[x].size() != n) throw std::invalid_argument("relation is not square");
  }
  for (Element x = 0; x < n; ++x) {
    if (!relation[x][x]) return {OrderViolation{OrderAxiom::reflexivity, {x}}};
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (relation[x][y] && relation[y][x]) return {OrderViolation{OrderAxiom::antisymmetry, {x, y}}};
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !relation[x][y]) continue;
      // every z with y <= z must satisfy x <= z
      auto missing = relation[y] & ~relation[x];
      if (auto z = missing.find_first(); z != boost::dynamic_bitset<>::npos) {
        return {OrderViolation{OrderAxiom::transitivity, {x, y, z}}};
      }
    }
  }
  return {};
}

struct FinitePoset::MeetCache {
  std::once_flag once;
  std::optional<std::vector<Element>> table;
};

FinitePoset::FinitePoset(std::vector<std::string> ids, Relation leq)
    : ids_(std::move(ids)), leq_(std::move(leq)), meet_cache_(std::make_shared<MeetCache>()) {
  const std::size_t n = ids_.size();
  for (Element x = 0; x < n; ++x) {
    if (!index_.emplace(ids_[x], x).second) {
      throw std::invalid_argument("duplicate element id '" + ids_[x] + "'");
    }
  }
  geq_.assign(n, boost::dynamic_bitset<>(n));
  for (Element a = 0; a < n; ++a) {
    for (auto b = leq_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = leq_[a].find_next(b)) {
      geq_[b][a] = true;
    }
  }
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> ids,
                                     const std::vector<std::pair<Element, Element>>& covers) {
  const std::size_t n = ids.size();
  Relation leq(n, boost::dynamic_bitset<>(n));
  for (Element x = 0; x < n; ++x) leq[x][x] = true;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw std::out_of_range("cover references unknown element");
    leq[lo][hi] = true;
  }
  // Warshall closure over bit rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (i != k && leq[i][k]) leq[i] |= leq[k];
    }
  }
  auto report = check_partial_order(leq);
  if (!report.ok()) {
    const auto& w = report.violation->witness;
    std::string what = "covers contain a cycle through '" + ids[w[0]] + "' and '" + ids[w[1]] + "'";
    throw PosetError(what, std::move(report));
  }
  return FinitePoset(std::move(ids), std::move(leq));
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> ids, Relation leq) {
  if (leq.size() != ids.size()) throw std::invalid_argument("relation size does not match element count");
  auto report = check_partial_order(leq);
  if (!report.ok()) {
    std::string what = "relation violates " + std::string(to_string(report.violation->axiom)) + " at (";
    for (std::size_t i = 0; i < report.violation->witness.size(); ++i) {
      if (i) what += ", ";
      what += ids[report.violation->witness[i]];
    }
    throw PosetError(what + ")", std::move(report));
  }
  return FinitePoset(std::move(ids), std::move(leq));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return chain(std::move(ids));
}

FinitePoset FinitePoset::chain(std::vector<std::string> ids) {
  const std::size_t n = ids.size();
  Relation leq(n, boost::dynamic_bitset<>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) leq[a][b] = true;
  }
  return FinitePoset(std::move(ids), std::move(leq));
}

FinitePoset FinitePoset::antichain(std::vector<std::string> ids) {
  const std::size_t n = ids.size();
  Relation leq(n, boost::dynamic_bitset<>(n));
  for (Element a = 0; a < n; ++a) leq[a][a] = true;
  return FinitePoset(std::move(ids), std::move(leq));
}

std::optional<Element> FinitePoset::find(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  return std::nullopt;
}

Element FinitePoset::index_of(std::string_view id) const {
  if (auto found = find(id)) return *found;
  throw std::out_of_range("unknown element '" + std::string(id) + "'");
}

boost::dynamic_bitset<> FinitePoset::mask(const ElementSet& subset) const {
  boost::dynamic_bitset<> bits(size());
  for (Element x : subset) bits.set(x);
  return bits;
}

ElementSet FinitePoset::to_set(const boost::dynamic_bitset<>& bits) {
  ElementSet out;
  for (auto x = bits.find_first(); x != boost::dynamic_bitset<>::npos; x = bits.find_next(x)) out.push_back(x);
  return out;
}

ElementSet FinitePoset::all() const {
  ElementSet out(size());
  for (Element x = 0; x < size(); ++x) out[x] = x;
  return out;
}

ElementSet FinitePoset::up_set(Element x) const { return to_set(leq_.at(x)); }
ElementSet FinitePoset::down_set(Element x) const { return to_set(geq_.at(x)); }

ElementSet FinitePoset::interval(Element lo, Element hi) const {
  return to_set(leq_.at(lo) & geq_.at(hi));
}

ElementSet FinitePoset::down_closure(const ElementSet& subset) const {
  boost::dynamic_bitset<> bits(size());
  for (Element x : subset) bits |= geq_[x];
  return to_set(bits);
}

ElementSet FinitePoset::up_closure(const ElementSet& subset) const {
  boost::dynamic_bitset<> bits(size());
  for (Element x : subset) bits |= leq_[x];
  return to_set(bits);
}

std::optional<Element> FinitePoset::least_element(const ElementSet& subset) const {
  const auto bits = mask(subset);
  for (Element x : subset) {
    if (bits.is_subset_of(leq_[x])) return x;
  }
  return std::nullopt;
}

std::optional<Element> FinitePoset::greatest_element(const ElementSet& subset) const {
  const auto bits = mask(subset);
  for (Element x : subset) {
    if (bits.is_subset_of(geq_[x])) return x;
  }
  return std::nullopt;
}

ElementSet FinitePoset::minimal_elements(const ElementSet& subset) const {
  const auto bits = mask(subset);
  ElementSet out;
  for (Element x : subset) {
    if ((bits & geq_[x]).count() == 1) out.push_back(x);
  }
  return out;
}

ElementSet FinitePoset::maximal_elements(const ElementSet& subset) const {
  const auto bits = mask(subset);
  ElementSet out;
  for (Element x : subset) {
    if ((bits & leq_[x]).count() == 1) out.push_back(x);
  }
  return out;
}

ElementSet FinitePoset::lower_bounds(const ElementSet& subset) const {
  boost::dynamic_bitset<> bits(size());
  bits.set();
  for (Element x : subset) bits &= geq_[x];
  return to_set(bits);
}

ElementSet FinitePoset::upper_bounds(const ElementSet& subset) const {
  boost::dynamic_bitset<> bits(size());
  bits.set();
  for (Element x : subset) bits &= leq_[x];
  return to_set(bits);
}

std::optional<Element> FinitePoset::meet(Element a, Element b) const {
  if (const auto* table = meet_table()) return (*table)[a * size() + b];
  const auto lower = geq_.at(a) & geq_.at(b);
  for (auto x = lower.find_first(); x != boost::dynamic_bitset<>::npos; x = lower.find_next(x)) {
    if (lower.is_subset_of(geq_[x])) return x;
  }
  return std::nullopt;
}

std::optional<Element> FinitePoset::join(Element a, Element b) const {
  const auto upper = leq_.at(a) & leq_.at(b);
  for (auto x = upper.find_first(); x != boost::dynamic_bitset<>::npos; x = upper.find_next(x)) {
    if (upper.is_subset_of(leq_[x])) return x;
  }
  return std::nullopt;
}

const std::vector<Element>* FinitePoset::meet_table() const {
  std::call_once(meet_cache_->once, [this] {
    const std::size_t n = size();
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        const auto lower = geq_[a] & geq_[b];
        std::optional<Element> glb;
        for (auto x = lower.find_first(); x != boost::dynamic_bitset<>::npos; x = lower.find_next(x)) {
          if (lower.is_subset_of(geq_[x])) {
            glb = x;
            break;
          }
        }
        if (!glb) return;
        table[a * n + b] = table[b * n + a] = *glb;
      }
    }
    meet_cache_->table = std::move(table);
  });
  return meet_cache_->table ? &*meet_cache_->table : nullptr;
}

bool FinitePoset::is_chain(const ElementSet& subset) const {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!comparable(subset[i], subset[j])) return false;
    }
  }
  return true;
}

bool FinitePoset::is_comprehensive(const ElementSet& subset) const {
  const auto bits = mask(subset);
  for (Element x : subset) {
    if (!geq_[x].is_subset_of(bits)) return false;
  }
  return true;
}

bool FinitePoset::is_filtered() const {
  for (Element a = 0; a < size(); ++a) {
    for (Element b = a + 1; b < size(); ++b) {
      if (!geq_[a].intersects(geq_[b])) return false;
    }
  }
  return true;
}

FinitePoset FinitePoset::induced(const ElementSet& subset) const {
  std::vector<std::string> ids;
  ids.reserve(subset.size());
  for (Element x : subset) ids.push_back(ids_.at(x));
  Relation leq(subset.size(), boost::dynamic_bitset<>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) leq[i][j] = leq_[subset[i]][subset[j]];
  }
  return FinitePoset(std::move(ids), std::move(leq));
}

ElementSet make_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

}  // namespace qleontief
