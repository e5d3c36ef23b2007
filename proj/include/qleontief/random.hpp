#pragma once

// Seeded generators for randomized certification corpora. Every draw is a
// pure function of (seed, stream, counter).

#include <cstdint>
#include <memory>
#include <vector>

#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Random DAG on `nodes - 1` elements, transitively closed, with an added
/// bottom element so the result is filtered.
FinitePoset random_filtered_poset(CounterRng& rng, std::size_t nodes);
/// Intersection-closed family of subsets of a small universe, ordered by
/// inclusion; always an inf-semilattice. At most max_nodes elements.
FinitePoset random_semilattice(CounterRng& rng, std::size_t max_nodes);
/// Product of `factors` chains with 2..max_len elements each.
ProductSpace random_chain_product(CounterRng& rng, std::size_t max_factors, std::size_t max_len);

/// Sweeps a linear extension; each value is at least the largest value below
/// it plus a random step from {0, 1/2, 1}.
Utility random_isotone(CounterRng& rng, std::shared_ptr<const FinitePoset> domain);
/// u(x) = max{v_k : x >= e_k} for a random chain bottom = e_0 < e_1 < ...
/// with increasing v_k; quasi-Leontief by construction. The domain must have
/// a bottom element.
Utility random_quasi_leontief(CounterRng& rng, std::shared_ptr<const FinitePoset> domain);
/// Random nonempty comprehensive subset generated by 1..3 random elements.
DownSet random_downset(CounterRng& rng, const FinitePoset& poset);

struct CorpusInstance {
  enum class Kind { isotone_dag, constructed_dag, isotone_semilattice, constructed_semilattice };
  Kind kind;
  Utility utility;
};

/// Instance `index` of the corpus for `seed`; kinds cycle through the four
/// generator combinations. Posets have at most 16 elements.
CorpusInstance corpus_instance(std::uint64_t seed, std::uint64_t index);

}  // namespace qleontief
