#pragma once

// Seeded instance families and the four randomized equivalence suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qleontief/product.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

/// Isotone utility on a product of chains (hence individually
/// quasi-Leontief) with one down-set per factor.
struct ChainProductInstance {
  ProductSpace space;
  Utility utility;
  std::vector<DownSet> sets;
};

/// At most 3 factors with at most 4 elements each.
ChainProductInstance chain_product_instance(std::uint64_t seed, std::uint64_t index);

/// Certified utility and a nonempty down-set; the domain alternates between
/// products of at most two 5-chains and random filtered posets.
struct DownsetInstance {
  Utility utility;
  DownSet subset;
};
DownsetInstance downset_instance(std::uint64_t seed, std::uint64_t index);

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t inconsistencies = 0;
  std::optional<std::uint64_t> first_failure;
  std::string detail;
};

struct CorpusOptions {
  std::uint64_t seed = 42;
  std::size_t n = 500;
  /// Corrupts one dual-table entry of the first certified triangle instance.
  bool mutate = false;
};

/// Suites triangle, charpar, localization, refinement, in that order.
std::vector<SuiteResult> run_corpus(const CorpusOptions& options);

}  // namespace qleontief
