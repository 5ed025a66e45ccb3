#include <gtest/gtest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace realclass;
using namespace testing_support;

namespace {

TEST(Generate, Sym3) { EXPECT_EQ(make_group(3, {"(1,2)", "(1,2,3)"}).order(), 6u); }

TEST(Generate, Dihedral10) {
  const auto g = make_group(5, {"(1,2,3,4,5)", "(2,5)(3,4)"});
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(elements_of(g), oracle::closure({perm("(1,2,3,4,5)", 5), perm("(2,5)(3,4)", 5)}, 5));
}

TEST(Generate, CapExceeded) {
  const std::vector<Permutation> gens{perm("(1,2)", 2)};
  EXPECT_THROW(Group::generate(gens, 2, 1), ClosureExceedsCap);
  EXPECT_EQ(Group::generate(gens, 2, 2).order(), 2u);
}

TEST(Generate, Preconditions) {
  EXPECT_THROW(Group::generate({}, 4), std::invalid_argument);
  const std::vector<Permutation> gens{Permutation::identity(4)};
  EXPECT_THROW(Group::generate(gens, 4, 0), std::invalid_argument);
  const auto g = Group::generate(gens, 4);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(Generate, DegreeMismatch) {
  const std::vector<Permutation> gens{perm("(1,2)", 2)};
  EXPECT_THROW(Group::generate(gens, 3), DegreeMismatch);
}

TEST(Generate, LargeGroupWithoutTable) {
  const auto s7 = sym(7);
  EXPECT_EQ(s7.order(), 5040u);
  const auto a = s7.index_of(perm("(1,2,3)", 7));
  const auto b = s7.index_of(perm("(3,4)(5,6,7)", 7));
  EXPECT_EQ(s7.element(s7.mul(a, b)), compose(s7.element(a), s7.element(b)));
  EXPECT_EQ(s7.element(s7.inv(b)), inverse(s7.element(b)));
}

TEST(DefaultCap, ReadsEnvironment) {
  ::setenv("REALCLASS_CAP", "10", 1);
  EXPECT_EQ(default_cap(), 10u);
  EXPECT_THROW(symmetric(4).build(), ClosureExceedsCap);
  ::unsetenv("REALCLASS_CAP");
  EXPECT_EQ(default_cap(), kDefaultCap);
}

TEST(Membership, Examples) {
  const auto a3 = make_group(3, {"(1,2,3)"});
  EXPECT_TRUE(is_member(a3, Permutation::identity(3)));
  EXPECT_TRUE(is_member(a3, perm("(1,2,3)", 3)));
  EXPECT_FALSE(is_member(a3, perm("(1,2)", 3)));
  EXPECT_THROW(a3.index_of(perm("(1,2)", 3)), NotAMember);
}

TEST(Group, IdentityIsIdZero) {
  const auto g = sym(4);
  EXPECT_TRUE(g.element(Group::identity()).is_identity());
  for (ElementId x = 0; x < g.order(); ++x) EXPECT_EQ(g.mul(0, x), x);
}

TEST(Group, ArithmeticMatchesPermutations) {
  const auto g = sym(4);
  for (ElementId a = 0; a < g.order(); a += 5)
    for (ElementId b = 0; b < g.order(); b += 3) {
      EXPECT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b)));
      EXPECT_EQ(g.element(g.conj(a, b)), conjugate(g.element(a), g.element(b)));
      EXPECT_EQ(g.element(g.commutator(a, b)), commutator(g.element(a), g.element(b)));
      EXPECT_EQ(g.commute(a, b), compose(g.element(a), g.element(b)) == compose(g.element(b), g.element(a)));
    }
  for (ElementId a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.element_order(a), element_order(g.element(a)));
    EXPECT_EQ(g.element(g.pow(a, -3)), power(g.element(a), -3));
  }
}

TEST(Classes, SortedBySizeThenRepresentative) {
  const auto g = sym(4);
  const auto& cs = g.classes();
  ASSERT_EQ(cs.size(), 5u);
  const auto key = [&](const ConjugacyClass& c) { return std::make_pair(c.size(), g.element(c.representative)); };
  for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LT(key(cs[i - 1]), key(cs[i]));
  for (const auto& c : cs)
    for (auto m : c.members) EXPECT_LE(g.element(c.representative), g.element(m));
}

TEST(Classes, PartitionTheGroup) {
  const auto g = sym(5);
  std::size_t total = 0;
  for (const auto& c : g.classes()) {
    total += c.size();
    for (auto m : c.members) EXPECT_EQ(&g.class_of(m), &c);
  }
  EXPECT_EQ(total, g.order());
}

TEST(Subgroup, GenerateAndQuery) {
  const auto g = sym(4);
  const std::vector<ElementId> seed{g.index_of(perm("(1,2,3,4)", 4))};
  const auto h = generate_subgroup(g, seed);
  EXPECT_EQ(h.order(), 4u);
  EXPECT_TRUE(h.contains(perm("(1,3)(2,4)", 4)));
  EXPECT_FALSE(h.contains(perm("(1,2)", 4)));
  EXPECT_TRUE(trivial_subgroup(g).is_subset_of(h));
  EXPECT_TRUE(h.is_subset_of(whole_group(g)));
  EXPECT_TRUE(whole_group(g).is_whole());
  EXPECT_TRUE(trivial_subgroup(g).is_trivial());
}

TEST(Subgroup, ToGroupKeepsElementOrder) {
  const auto g = sym(4);
  const auto h = generate_subgroup(g, std::vector<ElementId>{g.index_of(perm("(1,2)", 4)), g.index_of(perm("(3,4)", 4))});
  const auto k = h.to_group();
  ASSERT_EQ(k.order(), h.order());
  for (std::size_t i = 0; i < k.order(); ++i) EXPECT_EQ(k.element(static_cast<ElementId>(i)), g.element(h.members()[i]));
  EXPECT_TRUE(k.element(0).is_identity());
}

TEST(Subgroup, FromMembersRejectsNonSubgroup) {
  const auto g = sym(3);
  EXPECT_THROW(subgroup_from_members(g, {0, g.index_of(perm("(1,2,3)", 3))}), std::logic_error);
}

}  // namespace
