#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace realclass;
using namespace testing_support;

namespace {

Verdict run(const std::string& id, const Group& g) { return check(id, g); }

void expect_pass(const std::string& id, const Group& g) {
  const auto v = run(id, g);
  EXPECT_TRUE(v.applicable) << id;
  EXPECT_TRUE(v.passed) << id << ": " << v.witness.value_or("");
}

void expect_inapplicable(const std::string& id, const Group& g) {
  const auto v = run(id, g);
  EXPECT_FALSE(v.applicable) << id;
  EXPECT_TRUE(v.passed) << id;
}

TEST(Suite, StatementIdsAreUniqueAndOrdered) {
  const auto ids = all_statement_ids();
  EXPECT_EQ(ids.size(), 28u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  EXPECT_EQ(ids.front(), "real-powers");
  EXPECT_EQ(ids.back(), "equal-2-part-structure");
}

TEST(Suite, SelectionAndErrors) {
  const auto s4 = sym(4);
  EXPECT_TRUE(run_suite(s4, {}).empty());
  EXPECT_THROW(run_suite(s4, {"real-powers", "no-such-statement"}), std::invalid_argument);
  EXPECT_THROW(check("no-such-statement", s4), std::invalid_argument);
  const auto two = run_suite(s4, {"equal-2-part-structure", "real-powers"});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].statement, "real-powers");
  EXPECT_EQ(two[1].statement, "equal-2-part-structure");
}

TEST(Suite, Sym4AllPassOrInapplicable) {
  for (const auto& v : run_suite(sym(4))) EXPECT_TRUE(v.passed) << v.statement;
}

TEST(Verdict, FailKeepsFirstWitness) {
  Verdict v;
  v.fail("first");
  v.fail("second");
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(*v.witness, "first");
}

TEST(Verdict, Replay) {
  const auto s4 = sym(4);
  EXPECT_FALSE(reproduces(check("disconnected-solvable", s4), s4));
  Verdict forged = check("class-size-divisibility", s4);
  forged.fail("made up");
  EXPECT_FALSE(reproduces(forged, s4));
}

TEST(Verdict, HypothesesRecorded) {
  const auto v = run("disconnected-structure", alt(5));
  ASSERT_FALSE(v.hypotheses.empty());
  EXPECT_FALSE(v.applicable);
  for (const auto& [name, holds] : v.hypotheses) EXPECT_FALSE(name.empty());
}

TEST(RealLemmas, HoldEverywhereSmall) {
  for (const auto& g : {sym(4), quaternion(), dihedral(12).build(), psl2(5).build(), cyc(6)})
    for (const char* id : {"real-powers", "real-2-element-inverter", "real-odd-class-involution",
                           "real-commuting-product", "real-odd-index-normal", "real-coset-lift",
                           "extended-centralizer", "class-size-divisibility"})
      expect_pass(id, g);
}

TEST(TwoClosure, Examples) {
  for (const char* id : {"odd-real-iff-2-closed", "odd-real-sizes-iff", "sylow2-square-criterion"}) {
    expect_pass(id, sym(3));
    expect_pass(id, quaternion());
    expect_pass(id, dicyclic(12).build());
  }
  expect_pass("components-at-most-two", sym(3));
}

TEST(OrderP, Examples) {
  expect_pass("real-element-of-order-p", sym(3));
  expect_inapplicable("real-element-of-order-p", elementary_abelian(2, 3).build());
  expect_pass("p-free-real-sizes", frobenius(7, 3).build());
}

TEST(Disconnected, Sym3) {
  for (const char* id : {"disconnected-solvable", "disconnected-structure", "components-2-and-involution",
                         "involution-pi2-class", "disconnected-odd-index-normal"})
    expect_pass(id, sym(3));
  expect_inapplicable("disconnected-solvable", alt(5));
  expect_inapplicable("components-2-and-involution", cyc(8));
  expect_pass("disconnected-structure", dihedral(12).build());
}

TEST(Disconnected, Example48) {
  const auto g = example48_group();
  EXPECT_TRUE(delta_star(g).is_disconnected());
  for (const char* id : {"disconnected-solvable", "disconnected-structure", "components-2-and-involution",
                         "disconnected-odd-quotient"})
    expect_pass(id, g);
}

TEST(Quotients, Examples) {
  expect_pass("odd-quotient-subgraph", cyc(5));
  expect_pass("odd-quotient-subgraph", frobenius(7, 6).build());
  expect_pass("central-real-sylow2-connected", alt(4));
}

TEST(EqualTwoParts, Examples) {
  for (const char* id : {"equal-2-part-solvable", "equal-2-part-2-nilpotent", "equal-2-part-structure"}) {
    expect_pass(id, cyc(9));
    expect_inapplicable(id, sym(4));
  }
  expect_pass("real-2-elements-central", elementary_abelian(2, 3).build());
  expect_inapplicable("odd-index-2-part", sym(3));
  expect_pass("odd-index-2-part", quaternion());
  expect_pass("central-2-elements-mod-odd-core", frobenius(7, 3).build());
}

TEST(Suite, NoFailuresOnFamilies) {
  std::vector<GroupSpec> specs{dihedral(30), dicyclic(28), frobenius(13, 4), metacyclic(21, 6, 5),
                               alternating(5), psl2(7), direct_product(symmetric(3), cyclic(3))};
  for (const auto& s : specs)
    for (const auto& v : run_suite(s.build())) EXPECT_TRUE(v.passed) << s.name << " " << v.statement;
}

}  // namespace
