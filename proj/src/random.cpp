#include "qleontief/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qleontief {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = max() - max() % n;
  std::uint64_t r;
  do {
    r = (*this)();
  } while (r >= limit);
  return r % n;
}

std::int64_t CounterRng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

FinitePoset random_filtered_poset(CounterRng& rng, std::size_t nodes) {
  if (nodes == 0) throw std::invalid_argument("poset needs at least one node");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < nodes; ++i) ids.push_back("p" + std::to_string(i));
  // Edge density in percent; sparse DAGs give wide antichains, dense ones chains.
  const std::uint64_t density = 15 + rng.below(45);
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 1; i < nodes; ++i) {
    covers.emplace_back(0, i);
    for (Element j = i + 1; j < nodes; ++j) {
      if (rng.chance(density, 100)) covers.emplace_back(i, j);
    }
  }
  return FinitePoset::from_covers(std::move(ids), covers);
}

FinitePoset random_semilattice(CounterRng& rng, std::size_t max_nodes) {
  constexpr unsigned universe = 5;
  while (true) {
    std::set<unsigned> family;
    const std::size_t seeds = 3 + rng.below(6);
    for (std::size_t i = 0; i < seeds; ++i) family.insert(static_cast<unsigned>(rng.below(1u << universe)));
    bool grown = true;
    while (grown && family.size() <= max_nodes) {
      grown = false;
      for (unsigned a : std::vector<unsigned>(family.begin(), family.end())) {
        for (unsigned b : std::vector<unsigned>(family.begin(), family.end())) {
          grown |= family.insert(a & b).second;
        }
      }
    }
    if (family.size() > max_nodes) continue;
    std::vector<unsigned> sets(family.begin(), family.end());
    std::vector<std::string> ids;
    for (unsigned s : sets) {
      std::string id = "s";
      for (unsigned bit = 0; bit < universe; ++bit) id += (s >> bit & 1u) ? '1' : '0';
      ids.push_back(id);
    }
    Relation leq(sets.size(), boost::dynamic_bitset<>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) leq[i][j] = (sets[i] & sets[j]) == sets[i];
    }
    return FinitePoset::from_relation(std::move(ids), std::move(leq));
  }
}

ProductSpace random_chain_product(CounterRng& rng, std::size_t max_factors, std::size_t max_len) {
  const std::size_t factors = 1 + rng.below(max_factors);
  std::vector<FinitePoset> chains;
  for (std::size_t i = 0; i < factors; ++i) chains.push_back(FinitePoset::chain(2 + rng.below(max_len - 1)));
  return ProductSpace(std::move(chains));
}

namespace {

std::vector<Element> linear_extension(const FinitePoset& p) {
  std::vector<Element> order = p.all();
  std::vector<std::size_t> below(p.size());
  for (Element x = 0; x < p.size(); ++x) below[x] = p.down_set(x).size();
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return below[a] < below[b]; });
  return order;
}

}  // namespace

Utility random_isotone(CounterRng& rng, std::shared_ptr<const FinitePoset> domain) {
  const auto& p = *domain;
  std::vector<Rational> values(p.size());
  for (Element x : linear_extension(p)) {
    Rational floor(0);
    for (Element y : p.down_set(x)) {
      if (y != x) floor = std::max(floor, values[y]);
    }
    values[x] = floor + Rational(static_cast<std::int64_t>(rng.below(3)), 2);
  }
  return Utility(std::move(domain), std::move(values));
}

Utility random_quasi_leontief(CounterRng& rng, std::shared_ptr<const FinitePoset> domain) {
  const auto& p = *domain;
  auto bottom = p.bottom();
  if (!bottom) throw std::invalid_argument("constructed quasi-Leontief utilities need a bottom element");
  std::vector<Element> chain{*bottom};
  while (true) {
    auto above = p.up_set(chain.back());
    above.erase(std::remove(above.begin(), above.end(), chain.back()), above.end());
    if (above.empty() || rng.chance(1, 4)) break;
    chain.push_back(above[rng.below(above.size())]);
  }
  std::vector<Rational> levels;
  Rational level(static_cast<std::int64_t>(rng.below(3)), 2);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    levels.push_back(level);
    level += Rational(1 + static_cast<std::int64_t>(rng.below(3)), 2);
  }
  return Utility::from_function(domain, [&](Element x) {
    Rational v = levels[0];
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (p.leq(chain[k], x)) v = levels[k];
    }
    return v;
  });
}

DownSet random_downset(CounterRng& rng, const FinitePoset& poset) {
  ElementSet gens;
  const std::size_t count = 1 + rng.below(3);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(rng.below(poset.size()));
  return DownSet::from_generators(poset, std::move(gens));
}

CorpusInstance corpus_instance(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, index);
  const auto kind = static_cast<CorpusInstance::Kind>(index % 4);
  std::shared_ptr<const FinitePoset> domain;
  if (kind == CorpusInstance::Kind::isotone_dag || kind == CorpusInstance::Kind::constructed_dag) {
    domain = std::make_shared<const FinitePoset>(random_filtered_poset(rng, 4 + rng.below(13)));
  } else {
    domain = std::make_shared<const FinitePoset>(random_semilattice(rng, 16));
  }
  const bool constructed =
      kind == CorpusInstance::Kind::constructed_dag || kind == CorpusInstance::Kind::constructed_semilattice;
  Utility u = constructed ? random_quasi_leontief(rng, domain) : random_isotone(rng, domain);
  return CorpusInstance{kind, std::move(u)};
}

}  // namespace qleontief
