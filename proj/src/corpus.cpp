#include "qleontief/corpus.hpp"

#include <algorithm>
#include <functional>

#include "qleontief/efficiency.hpp"
#include "qleontief/maximize.hpp"
#include "qleontief/oracle.hpp"
#include "qleontief/random.hpp"

namespace qleontief {
namespace {

constexpr std::uint64_t chain_product_stream = 1;
constexpr std::uint64_t downset_stream = 2;

CounterRng rng_for(std::uint64_t seed, std::uint64_t family, std::uint64_t index) {
  return CounterRng(seed, (family << 32) | index);
}

using Check = std::function<std::optional<std::string>(std::uint64_t)>;

SuiteResult run_suite(const std::string& name, std::size_t n, const Check& check) {
  SuiteResult result{name, n, 0, std::nullopt, {}};
  for (std::uint64_t i = 0; i < n; ++i) {
    std::optional<std::string> failure;
    try {
      failure = check(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      ++result.inconsistencies;
      if (!result.first_failure) {
        result.first_failure = i;
        result.detail = *failure;
      }
    }
  }
  return result;
}

std::optional<std::string> triangle_check(std::uint64_t seed, std::uint64_t i, bool& mutate) {
  const auto instance = corpus_instance(seed, i);
  const Utility& u = instance.utility;
  const auto triangle = check_characterization_equivalence(u);
  if (!triangle.pass) return "characterization legs disagree: " + triangle.detail;
  auto regular = certify_regular(u);
  if (!regular.pass) return std::nullopt;
  if (mutate && u.size() > 1 && !regular.dual_table.empty()) {
    auto& entry = regular.dual_table.front();
    entry.point = (*entry.point + 1) % u.size();
    mutate = false;
  }
  const auto galois = verify_galois(u, regular.dual_table);
  if (!galois.pass) return "galois adjunction violated: " + galois.detail;
  return std::nullopt;
}

std::optional<std::string> localization_check(std::uint64_t seed, std::uint64_t i) {
  const auto instance = downset_instance(seed, i);
  const Utility& u = instance.utility;
  const ElementSet& s = instance.subset.members();
  const auto cert = check_argmax_localization(u, s);
  if (!cert.pass) return cert.detail;
  const auto& p = u.domain();
  const auto result = argmax_over_downset(u, s);
  if (!result.largest_efficient) return "no largest efficient point";
  const Element bar = *result.largest_efficient;
  if (u.evaluate(bar) != *result.value) return "largest efficient point is not a maximizer";
  for (Element x : result.maximizers) {
    if (!p.leq(bar, x)) return "largest efficient point does not lower-bound '" + p.id(x) + "'";
  }
  const Element top = maximal_argmax(u, s);
  const auto maximal = p.maximal_elements(s);
  if (!std::binary_search(maximal.begin(), maximal.end(), top)) return "maximal_argmax is not maximal in S";
  if (u.evaluate(top) != *result.value) return "maximal_argmax value differs";
  return std::nullopt;
}

std::optional<std::string> refinement_check(std::uint64_t seed, std::uint64_t i) {
  const auto instance = chain_product_instance(seed, i);
  std::vector<ElementSet> per_axis;
  for (const auto& s : instance.sets) per_axis.push_back(s.members());
  const Element start = maximal_argmax(instance.utility, instance.space.product_set(per_axis));
  const auto trace = efficient_refinement(instance.space, instance.utility, instance.sets, start);
  if (!trace.checks.all()) return trace.failure;
  return std::nullopt;
}

}  // namespace

ChainProductInstance chain_product_instance(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng = rng_for(seed, chain_product_stream, index);
  ProductSpace space = random_chain_product(rng, 3, 4);
  Utility u = random_isotone(rng, space.poset_ptr());
  std::vector<DownSet> sets;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    const auto& factor = space.factor(i);
    sets.push_back(DownSet::from_generators(factor, {static_cast<Element>(rng.below(factor.size()))}));
  }
  return ChainProductInstance{std::move(space), std::move(u), std::move(sets)};
}

DownsetInstance downset_instance(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng = rng_for(seed, downset_stream, index);
  std::shared_ptr<const FinitePoset> domain;
  if (index % 2 == 0) {
    ProductSpace space = random_chain_product(rng, 2, 5);
    domain = space.poset_ptr();
  } else {
    domain = std::make_shared<const FinitePoset>(random_filtered_poset(rng, 2 + rng.below(15)));
  }
  Utility u = certify(random_quasi_leontief(rng, domain));
  DownSet subset = random_downset(rng, *domain);
  return DownsetInstance{std::move(u), std::move(subset)};
}

std::vector<SuiteResult> run_corpus(const CorpusOptions& options) {
  bool mutate = options.mutate;
  const std::uint64_t seed = options.seed;
  std::vector<SuiteResult> out;
  out.push_back(run_suite("triangle", options.n, [&](std::uint64_t i) { return triangle_check(seed, i, mutate); }));
  out.push_back(run_suite("charpar", options.n, [&](std::uint64_t i) -> std::optional<std::string> {
    const auto instance = chain_product_instance(seed, i);
    const auto cert = check_charpar(instance.space, instance.utility, default_charpar_sample(instance.space));
    if (!cert.pass) return cert.detail;
    return std::nullopt;
  }));
  out.push_back(run_suite("localization", options.n, [&](std::uint64_t i) { return localization_check(seed, i); }));
  out.push_back(run_suite("refinement", options.n, [&](std::uint64_t i) { return refinement_check(seed, i); }));
  return out;
}

}  // namespace qleontief
