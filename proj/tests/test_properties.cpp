#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qleontief/combinators.hpp"
#include "qleontief/corpus.hpp"
#include "qleontief/efficiency.hpp"
#include "qleontief/maximize.hpp"
#include "qleontief/oracle.hpp"
#include "qleontief/random.hpp"

using namespace qleontief;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kInstances = 500;

std::optional<Utility> certified(const Utility& u) {
  auto r = certify_quasi_leontief(u);
  return r.certificate.pass ? r.utility : std::nullopt;
}

bool semilattice(CorpusInstance::Kind k) {
  return k == CorpusInstance::Kind::isotone_semilattice || k == CorpusInstance::Kind::constructed_semilattice;
}

}  // namespace

TEST(CorpusProperties, InteriorAndClosureLaws) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const auto inst = corpus_instance(kSeed, i);
    const auto u = certified(inst.utility);
    if (!u) continue;
    ++checked;
    const auto& p = u->domain();
    for (Element x = 0; x < p.size(); ++x) {
      const Element xi = u->interior(x);
      ASSERT_EQ(std::optional<Element>(xi), oracle::interior(*u, x)) << "instance " << i;
      EXPECT_TRUE(p.leq(xi, x));
      EXPECT_EQ(u->interior(xi), xi);
      for (Element y = 0; y < p.size(); ++y) {
        if (p.leq(x, y)) EXPECT_TRUE(p.leq(xi, u->interior(y)));
      }
    }
    const auto image = u->image();
    const auto levels = default_probe_levels(*u);
    for (const auto& l : levels) {
      if (l > u->max_value()) {
        EXPECT_THROW(u->closure_map(l), std::domain_error);
        continue;
      }
      const Rational c = u->closure_map(l);
      EXPECT_GE(c, l);
      EXPECT_EQ(u->closure_map(c), c);
      EXPECT_EQ(c == l, std::binary_search(image.begin(), image.end(), l)) << "instance " << i;
      for (const auto& m : levels) {
        if (l <= m && m <= u->max_value()) EXPECT_LE(c, u->closure_map(m));
      }
    }
  }
  EXPECT_GT(checked, kInstances / 4);
}

TEST(CorpusProperties, GaloisAdjunction) {
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const auto u = certified(corpus_instance(kSeed, i).utility);
    if (!u) continue;
    for (const auto& l : default_probe_levels(*u)) {
      const auto d = u->dual(l);
      ASSERT_EQ(d, oracle::dual(*u, l));
      if (!d) continue;
      for (Element x = 0; x < u->size(); ++x) {
        ASSERT_EQ(u->domain().leq(*d, x), u->evaluate(x) >= l) << "instance " << i;
      }
    }
    const auto reg = certify_regular(*u);
    ASSERT_TRUE(reg.pass);
    EXPECT_TRUE(verify_galois(*u, reg.dual_table).pass);
  }
}

TEST(CorpusProperties, EfficiencyStructure) {
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const auto inst = corpus_instance(kSeed, i);
    const auto u = certified(inst.utility);
    if (!u) continue;
    const auto& p = u->domain();
    const auto e = efficient_set(*u);
    EXPECT_TRUE(p.is_chain(make_set(e.points)));
    const auto image = u->image();
    ASSERT_EQ(e.points.size(), image.size()) << "instance " << i;
    for (std::size_t k = 0; k < image.size(); ++k) {
      EXPECT_EQ(u->dual(image[k]), e.points[k]);
      EXPECT_EQ(u->evaluate(e.points[k]), image[k]);
    }
    if (semilattice(inst.kind)) {
      ASSERT_TRUE(p.is_inf_semilattice());
      for (Element a : e.points) {
        for (Element b : e.points) {
          const Element m = *p.meet(a, b);
          EXPECT_NE(std::find(e.points.begin(), e.points.end(), m), e.points.end());
        }
      }
    }
  }
}

TEST(CorpusProperties, CharacterizationTriangle) {
  std::size_t ql = 0;
  std::size_t not_ql = 0;
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const auto u = corpus_instance(kSeed, i).utility;
    const auto c = check_characterization_equivalence(u);
    EXPECT_TRUE(c.pass) << "instance " << i << ": " << c.detail;
    const bool by_def = certify_quasi_leontief(u).certificate.pass;
    EXPECT_EQ(by_def, oracle::quasi_leontief(u));
    EXPECT_EQ(by_def, check_property_phi(u).pass && check_lower_bounded_level_sets(u, default_probe_levels(u)).pass);
    if (u.domain().is_inf_semilattice()) EXPECT_EQ(by_def, check_meet_homomorphism(u).pass);
    (by_def ? ql : not_ql) += 1;
  }
  EXPECT_GT(ql, 0u);
  EXPECT_GT(not_ql, 0u);
}

TEST(CorpusProperties, FailureWitnessesReplay) {
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    const auto u = corpus_instance(kSeed, i).utility;
    const auto c = certify_quasi_leontief(u).certificate;
    if (c.pass) continue;
    ASSERT_EQ(c.witnesses.size(), 2u);
    ASSERT_EQ(c.levels.size(), 1u);
    const auto set = oracle::level_set(u, c.levels[0]);
    const auto mins = oracle::minimal(u.domain(), set);
    for (Element w : c.witnesses) EXPECT_NE(std::find(mins.begin(), mins.end(), w), mins.end());
    EXPECT_NE(c.witnesses[0], c.witnesses[1]);

    const auto phi = check_property_phi(u);
    if (!phi.pass) {
      ASSERT_GE(phi.witnesses.size(), 2u);
      const Element a = phi.witnesses[0], b = phi.witnesses[1];
      const Rational m = std::min(u.evaluate(a), u.evaluate(b));
      for (Element z = 0; z < u.size(); ++z) {
        EXPECT_FALSE(u.domain().leq(z, a) && u.domain().leq(z, b) && u.evaluate(z) >= m);
      }
    }
  }
}

TEST(CorpusProperties, AffineTransformKeepsInterior) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto u = certified(corpus_instance(kSeed, i).utility);
    if (!u) continue;
    const auto v = certify(affine_transform(*u, Rational(3, 2), Rational(-7)));
    EXPECT_EQ(v.interior_table(), u->interior_table());
  }
}

TEST(CorpusProperties, ArgmaxUpwardClosureAndLocalization) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto inst = downset_instance(kSeed, i);
    const auto& s = inst.subset;
    const auto r = argmax_over_downset(inst.utility, s);
    const auto brute = oracle::argmax(inst.utility, s.members());
    ASSERT_EQ(r.maximizers, make_set(brute)) << "instance " << i;
    ASSERT_TRUE(r.largest_efficient);
    for (Element m : brute) EXPECT_TRUE(inst.utility.domain().leq(*r.largest_efficient, m));
    for (Element m : brute) {
      for (Element y : s.members()) {
        if (inst.utility.domain().leq(m, y)) {
          EXPECT_NE(std::find(brute.begin(), brute.end(), y), brute.end());
        }
      }
    }
    EXPECT_TRUE(check_argmax_localization(inst.utility, s.members()).pass) << "instance " << i;
  }
}

TEST(CorpusProperties, CorpusRunnerIsDeterministic) {
  CorpusOptions opts;
  opts.n = 50;
  const auto a = run_corpus(opts);
  const auto b = run_corpus(opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].name, b[k].name);
    EXPECT_EQ(a[k].inconsistencies, 0u);
    EXPECT_EQ(a[k].inconsistencies, b[k].inconsistencies);
  }
  opts.mutate = true;
  std::size_t bad = 0;
  for (const auto& r : run_corpus(opts)) bad += r.inconsistencies;
  EXPECT_GT(bad, 0u);
}
