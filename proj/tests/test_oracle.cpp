#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qleontief/oracle.hpp"

using namespace qleontief;
using fx::pt;

namespace {

Utility sum_2x2(const ProductSpace& g) {
  return fx::tab(g, [](const std::vector<Rational>& v) { return v[0] + v[1]; });
}

std::shared_ptr<const FinitePoset> vee() {
  return fx::share(FinitePoset::from_covers({"z", "a", "b"}, {{0, 1}, {0, 2}}));
}

}  // namespace

TEST(CertifyQuasiLeontief, IdentityChain) {
  auto p = fx::share(FinitePoset::chain(3));
  const auto r = certify_quasi_leontief(Utility(p, {0, 1, 2}));
  ASSERT_TRUE(r.certificate.pass);
  ASSERT_TRUE(r.utility.has_value());
  EXPECT_EQ(r.utility->interior_table(), (std::vector<Element>{0, 1, 2}));
}

TEST(CertifyQuasiLeontief, SumFailsWithAntichainWitness) {
  const auto g = fx::grid({1, 1});
  const auto u = sum_2x2(g);
  const auto r = certify_quasi_leontief(u);
  ASSERT_FALSE(r.certificate.pass);
  EXPECT_FALSE(r.utility.has_value());
  EXPECT_EQ(make_set(r.certificate.witnesses), make_set({pt(g, {0, 1}), pt(g, {1, 0})}));
  ASSERT_EQ(r.certificate.levels, std::vector<Rational>{1});
  // Replay: both witnesses are minimal in the level set, so it has no least element.
  const auto level = oracle::level_set(u, 1);
  EXPECT_FALSE(oracle::least(g.poset(), level).has_value());
  EXPECT_EQ(make_set(oracle::minimal(g.poset(), level)), make_set(r.certificate.witnesses));
  EXPECT_THROW(certify(u), CertificationError);
}

TEST(CertifyQuasiLeontief, MinPasses) {
  const auto g = fx::grid({1, 1});
  const auto r = certify_quasi_leontief(fx::min_xy(g));
  EXPECT_TRUE(r.certificate.pass);
  for (Element x = 0; x < g.size(); ++x) EXPECT_EQ(r.utility->interior(x), oracle::interior(fx::min_xy(g), x));
}

TEST(CertifyRegular, IdentityChainWithProbes) {
  auto p = fx::share(FinitePoset::chain(3));
  const Utility u(p, {0, 1, 2});
  const auto c = certify_regular(u, {Rational(-1), Rational(1, 2), Rational(3, 2), Rational(5)});
  EXPECT_TRUE(c.pass);
  for (const auto& e : c.dual_table) EXPECT_EQ(e.point, oracle::dual(u, e.level));
  // 5 is above u(X); it is not in the table.
  for (const auto& e : c.dual_table) EXPECT_LE(e.level, Rational(2));
}

TEST(CertifyRegular, FiniteTruncationOfNonRegularChain) {
  // {0, 1} ∪ {2 + 1/k : k = 1..5} ∪ {3} with the value 2 left out.
  std::vector<Rational> values{0, 1};
  for (int k = 5; k >= 1; --k) values.push_back(Rational(2) + Rational(1, k));
  values.push_back(3);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::string> ids;
  for (const auto& v : values) ids.push_back(to_string(v));
  const Utility u(fx::share(FinitePoset::chain(ids)), values);
  EXPECT_TRUE(certify_regular(u).pass);
  EXPECT_TRUE(certify_regular(u, {Rational(2)}).pass);
}

TEST(CertifyRegular, LeastlessLevelOnVee) {
  const Utility u(vee(), {0, 1, 1});
  const auto c = certify_regular(u, {Rational(1)});
  ASSERT_FALSE(c.pass);
  EXPECT_EQ(make_set(c.witnesses), make_set({1, 2}));
  EXPECT_EQ(c.levels, std::vector<Rational>{1});
}

TEST(DefaultProbes, BetweenAndAround) {
  auto p = fx::share(FinitePoset::chain(3));
  const Utility u(p, {0, 1, 3});
  EXPECT_EQ(default_probe_levels(u),
            (std::vector<Rational>{-1, 0, Rational(1, 2), 1, 2, 3, 4}));
}

TEST(PropertyPhi, Examples) {
  const auto g = fx::grid({1, 1});
  EXPECT_TRUE(check_property_phi(fx::min_xy(g)).pass);
  const auto c = check_property_phi(sum_2x2(g));
  ASSERT_FALSE(c.pass);
  EXPECT_EQ(make_set(c.witnesses), make_set({pt(g, {0, 1}), pt(g, {1, 0})}));
  auto chain = fx::share(FinitePoset::chain(4));
  EXPECT_TRUE(check_property_phi(Utility(chain, {0, 0, 2, 5})).pass);
}

TEST(Isotone, Examples) {
  auto chain = fx::share(FinitePoset::chain(2));
  EXPECT_TRUE(check_isotone(Utility(chain, {3, 3})).pass);
  EXPECT_TRUE(check_isotone(Utility(chain, {0, 1})).pass);
  const auto c = check_isotone(Utility(chain, {1, 0}));
  ASSERT_FALSE(c.pass);
  EXPECT_EQ(c.witnesses, (std::vector<Element>{0, 1}));
}

TEST(LowerBoundedLevelSets, Examples) {
  EXPECT_TRUE(check_lower_bounded_level_sets(Utility(vee(), {0, 1, 1}), {Rational(1)}).pass);
  auto anti = fx::share(FinitePoset::antichain({"a", "b"}));
  const auto c = check_lower_bounded_level_sets(Utility(anti, {1, 1}), {Rational(1)});
  ASSERT_FALSE(c.pass);
  EXPECT_EQ(c.levels, std::vector<Rational>{1});
  // A probe above u(X) has an empty level set.
  EXPECT_TRUE(check_lower_bounded_level_sets(Utility(vee(), {0, 1, 1}), {Rational(7)}).pass);
}

TEST(CharacterizationEquivalence, MinAndSum) {
  const auto g3 = fx::grid({2, 2});
  const auto m = check_characterization_equivalence(fx::min_xy(g3));
  EXPECT_TRUE(m.pass);
  for (const auto& [name, ok] : m.facets) EXPECT_TRUE(ok) << name;

  const auto g = fx::grid({1, 1});
  const auto s = check_characterization_equivalence(sum_2x2(g));
  EXPECT_TRUE(s.pass);
  for (const auto& [name, ok] : s.facets) {
    if (name != "isotone" && name != "lower_bounded_level_sets") EXPECT_FALSE(ok) << name;
  }
}

TEST(CharacterizationEquivalence, RequiresFilteredDomain) {
  auto anti = fx::share(FinitePoset::antichain({"a", "b"}));
  EXPECT_THROW(check_characterization_equivalence(Utility(anti, {0, 1})), std::invalid_argument);
}

TEST(MeetHomomorphism, Examples) {
  const auto g = fx::grid({3, 3});
  EXPECT_TRUE(check_meet_homomorphism(fx::min_xy(g)).pass);
  const auto g2 = fx::grid({1, 1});
  const auto c = check_meet_homomorphism(sum_2x2(g2));
  ASSERT_FALSE(c.pass);
  ASSERT_EQ(c.witnesses.size(), 3u);
  EXPECT_EQ(make_set({c.witnesses[0], c.witnesses[1]}), make_set({pt(g2, {0, 1}), pt(g2, {1, 0})}));
  EXPECT_EQ(c.witnesses[2], pt(g2, {0, 0}));
  auto chain = fx::share(FinitePoset::chain(4));
  EXPECT_TRUE(check_meet_homomorphism(Utility(chain, {0, 2, 2, 3})).pass);
  auto p = fx::share(FinitePoset::from_covers({"c", "d", "a", "b"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_THROW(check_meet_homomorphism(Utility(p, {0, 0, 1, 1})), std::invalid_argument);
}

TEST(VerifyGalois, ClassicalPassesAndMutationFails) {
  const auto g = fx::grid({4, 4});
  const auto u = certify(tabulate(ClassicalLeontief<Rational>({1, 2}), g));
  std::vector<DualEntry> table;
  for (int l = 0; l <= 4; ++l) table.push_back({l, u.dual(l)});
  EXPECT_TRUE(verify_galois(u, table).pass);

  auto corrupted = table;
  const auto two = g.coords(*table[2].point);
  ASSERT_EQ(g.values(*table[2].point), (std::vector<Rational>{2, 1}));
  corrupted[2].point = g.element({two[0] - 1, two[1]});
  const auto c = verify_galois(u, corrupted);
  ASSERT_FALSE(c.pass);
  ASSERT_FALSE(c.witnesses.empty());
  // The witness is a point where the two sides of the adjunction disagree.
  const Element w = c.witnesses.front();
  EXPECT_NE(oracle::leq(g.poset(), *corrupted[2].point, w), u.evaluate(w) >= 2);

  EXPECT_TRUE(verify_galois(u, {}).pass);
}

TEST(MonotoneClosure, QuasiLeontiefImpliesIsotoneAndPhi) {
  const auto g = fx::grid({2, 3});
  const auto u = tabulate(ClassicalLeontief<Rational>({3, 2}), g);
  ASSERT_TRUE(certify_quasi_leontief(u).certificate.pass);
  EXPECT_TRUE(check_isotone(u).pass);
  EXPECT_TRUE(check_property_phi(u).pass);
}

TEST(CertificateJson, Shape) {
  const auto g = fx::grid({1, 1});
  const auto j = to_json(certify_quasi_leontief(sum_2x2(g)).certificate, g.poset());
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["property"], "quasi_leontief");
  EXPECT_EQ(j["witnesses"], (nlohmann::json{"(0,1)", "(1,0)"}));
  const auto ok = to_json(certify_regular(fx::min_xy(g)), g.poset());
  EXPECT_EQ(ok["verdict"], "pass");
  EXPECT_EQ(ok["dual_table"]["1"], "(1,1)");
}
