#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qleontief/order.hpp"
#include "qleontief/product.hpp"
#include "qleontief/rational.hpp"

using namespace qleontief;

namespace {

Relation full(std::size_t n, std::initializer_list<std::pair<Element, Element>> pairs) {
  Relation r(n, boost::dynamic_bitset<>(n));
  for (Element i = 0; i < n; ++i) r[i].set(i);
  for (auto [a, b] : pairs) r[a].set(b);
  return r;
}

}  // namespace

TEST(CheckPartialOrder, ChainPasses) {
  EXPECT_TRUE(check_partial_order(full(3, {{0, 1}, {1, 2}, {0, 2}})).ok());
}

TEST(CheckPartialOrder, Antisymmetry) {
  const auto report = check_partial_order(full(2, {{0, 1}, {1, 0}}));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violation->axiom, OrderAxiom::antisymmetry);
  EXPECT_EQ(report.violation->witness, (std::vector<Element>{0, 1}));
}

TEST(CheckPartialOrder, Transitivity) {
  const auto report = check_partial_order(full(3, {{0, 1}, {1, 2}}));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violation->axiom, OrderAxiom::transitivity);
  EXPECT_EQ(report.violation->witness, (std::vector<Element>{0, 1, 2}));
}

TEST(CheckPartialOrder, Reflexivity) {
  Relation r(2, boost::dynamic_bitset<>(2));
  r[0].set(0);
  const auto report = check_partial_order(r);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violation->axiom, OrderAxiom::reflexivity);
  EXPECT_EQ(report.violation->witness, (std::vector<Element>{1}));
}

TEST(FinitePoset, FromRelationRejectsNonOrder) {
  EXPECT_THROW(FinitePoset::from_relation({"a", "b"}, full(2, {{0, 1}, {1, 0}})), PosetError);
}

TEST(FinitePoset, CoverCycleRejected) {
  EXPECT_THROW(FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}), PosetError);
}

TEST(FinitePoset, CoversAreClosed) {
  const auto p = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_FALSE(p.leq(2, 0));
  EXPECT_TRUE(p.is_chain(p.all()));
}

TEST(FinitePoset, UnknownId) {
  const auto p = FinitePoset::chain(3);
  EXPECT_THROW(p.index_of("x"), std::out_of_range);
  EXPECT_FALSE(p.find("x").has_value());
  EXPECT_EQ(p.index_of("2"), 2u);
}

TEST(UpSet, GridExamples) {
  const auto g = fx::grid({1, 1});
  const auto& p = g.poset();
  EXPECT_EQ(p.up_set(fx::pt(g, {0, 1})), make_set({fx::pt(g, {0, 1}), fx::pt(g, {1, 1})}));
  EXPECT_EQ(p.up_set(*p.top()), ElementSet{*p.top()});
  EXPECT_EQ(p.down_set(fx::pt(g, {0, 1})), make_set({fx::pt(g, {0, 0}), fx::pt(g, {0, 1})}));
}

TEST(UpSet, Antichain) {
  const auto p = FinitePoset::antichain({"a", "b"});
  EXPECT_EQ(p.up_set(0), ElementSet{0});
}

TEST(Interval, UpOfLowMeetsDownOfHigh) {
  const auto g = fx::grid({2, 2});
  const auto& p = g.poset();
  const auto lo = fx::pt(g, {0, 1});
  const auto hi = fx::pt(g, {1, 2});
  EXPECT_EQ(p.interval(lo, hi), make_set({lo, fx::pt(g, {0, 2}), fx::pt(g, {1, 1}), hi}));
  EXPECT_TRUE(p.interval(hi, lo).empty());
}

TEST(LeastElement, Examples) {
  const auto g = fx::grid({1, 1});
  const auto& p = g.poset();
  const auto a = fx::pt(g, {0, 1});
  const auto b = fx::pt(g, {1, 0});
  EXPECT_EQ(p.least_element(make_set({a, fx::pt(g, {1, 1})})), a);
  EXPECT_FALSE(p.least_element(make_set({a, b})).has_value());
  EXPECT_EQ(p.minimal_elements(make_set({a, b})), make_set({a, b}));
  EXPECT_FALSE(p.least_element({}).has_value());
  EXPECT_TRUE(p.minimal_elements({}).empty());
  EXPECT_EQ(p.maximal_elements(p.all()), ElementSet{*p.top()});
}

TEST(Meet, Examples) {
  const auto g = fx::grid({2, 2});
  const auto& p = g.poset();
  EXPECT_EQ(p.meet(fx::pt(g, {1, 2}), fx::pt(g, {2, 1})), fx::pt(g, {1, 1}));
  EXPECT_EQ(p.join(fx::pt(g, {1, 2}), fx::pt(g, {2, 1})), fx::pt(g, {2, 2}));
  EXPECT_EQ(p.meet(fx::pt(g, {1, 2}), fx::pt(g, {1, 2})), fx::pt(g, {1, 2}));
  const auto anti = FinitePoset::antichain({"a", "b"});
  EXPECT_FALSE(anti.meet(0, 1).has_value());
  EXPECT_FALSE(anti.is_inf_semilattice());
  EXPECT_TRUE(p.is_inf_semilattice());
}

TEST(Meet, NoGreatestLowerBound) {
  // Two incomparable lower bounds c, d under both a and b.
  const auto p = FinitePoset::from_covers({"c", "d", "a", "b"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_FALSE(p.meet(2, 3).has_value());
  EXPECT_EQ(p.lower_bounds({2, 3}), make_set({0, 1}));
}

TEST(IsChain, Examples) {
  const auto g = fx::grid({1, 1});
  const auto& p = g.poset();
  EXPECT_TRUE(p.is_chain(make_set({fx::pt(g, {0, 0}), fx::pt(g, {1, 1})})));
  EXPECT_FALSE(p.is_chain(make_set({fx::pt(g, {0, 1}), fx::pt(g, {1, 0})})));
  EXPECT_TRUE(p.is_chain({}));
}

TEST(IsComprehensive, Examples) {
  const auto g = fx::grid({1, 1});
  const auto& p = g.poset();
  EXPECT_TRUE(p.is_comprehensive(make_set({fx::pt(g, {0, 0}), fx::pt(g, {0, 1})})));
  const ElementSet top{fx::pt(g, {1, 1})};
  EXPECT_FALSE(p.is_comprehensive(top));
  EXPECT_EQ(p.down_closure(top), p.all());
  EXPECT_TRUE(p.is_comprehensive({}));
}

TEST(IsFiltered, Examples) {
  EXPECT_TRUE(FinitePoset::from_covers({"z", "a", "b"}, {{0, 1}, {0, 2}}).is_filtered());
  EXPECT_FALSE(FinitePoset::antichain({"a", "b"}).is_filtered());
  EXPECT_TRUE(fx::grid({2, 2}).poset().is_filtered());
  // Filtered without being a semilattice: a bottom under the meetless pair.
  const auto p = FinitePoset::from_covers({"z", "c", "d", "a", "b"},
                                          {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  EXPECT_TRUE(p.is_filtered());
  EXPECT_FALSE(p.is_inf_semilattice());
}

TEST(Induced, KeepsOrder) {
  const auto g = fx::grid({1, 1});
  const ElementSet s = make_set({fx::pt(g, {0, 0}), fx::pt(g, {1, 1})});
  const auto sub = g.poset().induced(s);
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_TRUE(sub.leq(0, 1));
  EXPECT_EQ(sub.id(1), "(1,1)");
}

TEST(ProductSpace, FourPointsWithIncomparablePair) {
  const auto g = fx::grid({1, 1});
  EXPECT_EQ(g.size(), 4u);
  EXPECT_FALSE(g.poset().comparable(fx::pt(g, {0, 1}), fx::pt(g, {1, 0})));
}

TEST(ProductSpace, DeleteAndSubstitute) {
  const Point x{0, 1, 2};
  EXPECT_EQ(ProductSpace::erase(x, 1), (Point{0, 2}));
  EXPECT_EQ(ProductSpace::insert(Point{0, 2}, 1, 3), (Point{0, 3, 2}));
  const auto g = fx::grid({2, 2, 2});
  const Element e = g.element({0, 1, 2});
  EXPECT_EQ(g.coords(g.with_axis(e, 1, 0)), (Point{0, 0, 2}));
  EXPECT_EQ(g.coordinate(e, 2), 2u);
}

TEST(ProductSpace, EmptyFactorListRejected) {
  EXPECT_THROW(ProductSpace(std::vector<FinitePoset>{}), std::invalid_argument);
}

TEST(DownSet, Constructors) {
  const auto g = fx::grid({3, 3});
  const auto& p = g.poset();
  const auto s = DownSet::from_generators(p, {fx::pt(g, {2, 3})});
  EXPECT_EQ(s.size(), 12u);
  EXPECT_TRUE(s.contains(fx::pt(g, {0, 0})));
  EXPECT_FALSE(s.contains(fx::pt(g, {3, 0})));
  EXPECT_THROW(DownSet::from_members(p, {fx::pt(g, {1, 1})}), NotComprehensiveError);
  const auto m = DownSet::from_members(p, s.members());
  EXPECT_EQ(m.generators(), ElementSet{fx::pt(g, {2, 3})});
  EXPECT_EQ(DownSet::whole(p).size(), 16u);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}
