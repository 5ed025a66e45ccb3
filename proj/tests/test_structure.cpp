#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace realclass;
using namespace testing_support;

namespace {

std::vector<ElementId> ids(const Group& g, const std::vector<std::string>& cycles) {
  std::vector<ElementId> out;
  for (const auto& c : cycles) out.push_back(g.index_of(perm(c, g.degree())));
  return out;
}

TEST(Centralizer, Examples) {
  const auto s3 = sym(3);
  EXPECT_TRUE(centralizer(s3, Group::identity()).is_whole());
  const auto c = centralizer(s3, perm("(1,2)", 3));
  EXPECT_EQ(c.order(), 2u);
  const auto brute = oracle::centralizer(elements_of(s3), perm("(1,2)", 3));
  EXPECT_EQ(members_of(c), std::vector<Permutation>(brute.begin(), brute.end()));
  const auto c6 = cyc(6);
  for (ElementId x = 0; x < c6.order(); ++x) EXPECT_TRUE(centralizer(c6, x).is_whole());
  EXPECT_THROW(centralizer(s3, perm("(1,2)", 4)), DegreeMismatch);
  EXPECT_THROW(centralizer(make_group(3, {"(1,2,3)"}), perm("(1,2)", 3)), NotAMember);
}

TEST(Center, Examples) {
  EXPECT_TRUE(center(cyc(5)).is_whole());
  EXPECT_TRUE(center(sym(3)).is_trivial());
  EXPECT_EQ(center(quaternion()).order(), 2u);
  const auto g = dicyclic(12).build();
  const auto brute = oracle::center(elements_of(g));
  EXPECT_EQ(members_of(center(g)), std::vector<Permutation>(brute.begin(), brute.end()));
}

TEST(ClassSizes, Sym4) { EXPECT_EQ(sorted(class_sizes(sym(4))), (std::vector<std::uint64_t>{1, 3, 6, 6, 8})); }

TEST(NormalClosure, Examples) {
  const auto s4 = sym(4);
  EXPECT_TRUE(normal_closure(s4, std::vector<ElementId>{Group::identity()}).is_trivial());
  const auto a4 = normal_closure(s4, ids(s4, {"(1,2,3)"}));
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(members_of(a4), elements_of(alt(4)));
  EXPECT_TRUE(normal_closure(s4, std::vector<Permutation>(s4.generators().begin(), s4.generators().end())).is_whole());
  EXPECT_EQ(normal_closure(s4, ids(s4, {"(1,2)(3,4)"})).order(), 4u);
}

TEST(Normality, Examples) {
  const auto s4 = sym(4);
  EXPECT_TRUE(is_normal(s4, normal_closure(s4, ids(s4, {"(1,2)(3,4)"}))));
  EXPECT_FALSE(is_normal(s4, generate_subgroup(s4, ids(s4, {"(1,2)"}))));
  EXPECT_TRUE(is_normal(s4, trivial_subgroup(s4)));
  EXPECT_TRUE(is_normal(s4, whole_group(s4)));
}

TEST(JoinIntersect, Sym4) {
  const auto s4 = sym(4);
  const auto a = generate_subgroup(s4, ids(s4, {"(1,2)"}));
  const auto b = generate_subgroup(s4, ids(s4, {"(3,4)"}));
  EXPECT_EQ(join(a, b).order(), 4u);
  EXPECT_TRUE(intersect(a, b).is_trivial());
  EXPECT_EQ(intersect(a, join(a, b)), a);
}

TEST(Derived, Examples) {
  EXPECT_TRUE(is_solvable(cyc(12)));
  std::vector<std::size_t> orders;
  for (const auto& h : derived_series(sym(4))) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{24, 12, 4, 1}));
  EXPECT_TRUE(is_solvable(sym(4)));
  const auto a5 = alt(5);
  EXPECT_TRUE(derived_subgroup(a5).is_whole());
  EXPECT_FALSE(is_solvable(a5));
  EXPECT_EQ(derived_series(a5).size(), 1u);
}

TEST(Derived, MatchesBruteForce) {
  for (const auto& g : {sym(4), dicyclic(24).build(), frobenius(7, 6).build(), psl2(5).build()}) {
    EXPECT_EQ(members_of(derived_subgroup(g)), oracle::derived(elements_of(g), g.degree()));
  }
}

TEST(Sylow, Examples) {
  EXPECT_TRUE(sylow_subgroup(cyc(15), 2).is_trivial());
  EXPECT_EQ(sylow_subgroup(sym(4), 2).order(), 8u);
  const auto s3 = sym(3);
  EXPECT_EQ(members_of(sylow_subgroup(s3, 3)), elements_of(make_group(3, {"(1,2,3)"})));
  EXPECT_EQ(sylow_subgroup(psl2(7).build(), 7).order(), 7u);
  EXPECT_EQ(sylow_subgroup(psl2(13).build(), 2).order(), 4u);
  EXPECT_THROW(sylow_subgroup(s3, 4), std::invalid_argument);
}

TEST(Sylow, IsPSubgroup) {
  for (const auto& g : {sym(5), psl2(11).build(), dicyclic(40).build()})
    for (Prime p : prime_divisors(g.order())) {
      const auto s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p));
      EXPECT_TRUE(is_p_group(s.to_group(), p));
    }
}

TEST(Normalizer, Examples) {
  const auto s4 = sym(4);
  EXPECT_TRUE(normalizer(s4, normal_closure(s4, ids(s4, {"(1,2,3)"}))).is_whole());
  EXPECT_TRUE(normalizer(s4, whole_group(s4)).is_whole());
  const auto s3 = sym(3);
  const auto t = generate_subgroup(s3, ids(s3, {"(1,2)"}));
  EXPECT_EQ(normalizer(s3, t), t);
}

TEST(Closedness, Examples) {
  EXPECT_TRUE(is_p_closed(cyc(12), 2));
  EXPECT_TRUE(is_p_nilpotent(cyc(12), 2));
  EXPECT_FALSE(is_p_closed(sym(3), 2));
  EXPECT_TRUE(is_p_nilpotent(sym(3), 2));
  EXPECT_FALSE(is_p_closed(sym(4), 2));
  EXPECT_FALSE(is_p_nilpotent(sym(4), 2));
  EXPECT_TRUE(is_p_closed(alt(4), 2));
}

TEST(OUpper, Examples) {
  EXPECT_TRUE(o_upper(dihedral(16).build(), 2).is_whole());
  EXPECT_TRUE(o_upper(cyc(15), 2).is_trivial());
  EXPECT_TRUE(o_upper(sym(4), 2).is_whole());
  EXPECT_EQ(o_upper(alt(4), 2).order(), 4u);
  EXPECT_EQ(o_upper(sym(3), 3).order(), 3u);
}

TEST(OLower, Examples) {
  const auto q = dihedral(16).build();
  EXPECT_TRUE(o_lower(q, 2).is_trivial());
  EXPECT_TRUE(o_p(q, 2).is_whole());
  const auto s3 = sym(3);
  EXPECT_EQ(members_of(o_lower(s3, 2)), elements_of(make_group(3, {"(1,2,3)"})));
  EXPECT_TRUE(o_p(s3, 2).is_trivial());
  EXPECT_EQ(o_p(sym(4), 2).order(), 4u);
  EXPECT_TRUE(o_lower(sym(4), 2).is_trivial());
}

TEST(OLower, Example48) {
  const auto g = example48_group();
  const auto o2 = o_p(g, 2);
  EXPECT_EQ(o2.order(), 8u);
  EXPECT_EQ(quotient(g, o2).group.order(), 6u);
}

TEST(Quotient, Examples) {
  const auto s4 = sym(4);
  EXPECT_EQ(quotient(s4, whole_group(s4)).group.order(), 1u);
  const auto regular = quotient(s4, trivial_subgroup(s4));
  EXPECT_EQ(regular.group.order(), 24u);
  EXPECT_EQ(regular.group.degree(), 24u);
  const auto v4 = normal_closure(s4, ids(s4, {"(1,2)(3,4)"}));
  const auto q = quotient(s4, v4);
  EXPECT_EQ(q.group.order(), 6u);
  EXPECT_EQ(sorted(class_sizes(q.group)), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_THROW(quotient(s4, generate_subgroup(s4, ids(s4, {"(1,2)"}))), NotNormal);
}

TEST(Quotient, ProjectionIsHomomorphism) {
  const auto g = dicyclic(24).build();
  const auto n = center(g);
  const auto q = quotient(g, n);
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      ASSERT_EQ(q.projection[g.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
  for (ElementId a = 0; a < g.order(); ++a) EXPECT_EQ(q.projection[a] == 0, n.contains(a));
}

TEST(ClassSizeDivides, Examples) {
  const auto s4 = sym(4);
  const auto x = s4.index_of(perm("(1,2)", 4));
  EXPECT_EQ(class_size_divides(s4, whole_group(s4), x), std::make_pair(true, true));
  EXPECT_EQ(class_size_divides(s4, trivial_subgroup(s4), x), std::make_pair(true, true));
  // |x^{V4}| = 2 divides 6 and |(xV4)^{S4/V4}| = 3 divides 6.
  const auto v4 = normal_closure(s4, ids(s4, {"(1,2)(3,4)"}));
  EXPECT_EQ(class_size_divides(s4, v4, x), std::make_pair(true, true));
}

TEST(NormalSubgroups, Sym4) {
  const auto scan = normal_subgroups(sym(4));
  EXPECT_TRUE(scan.complete);
  std::vector<std::size_t> orders;
  for (const auto& n : scan.subgroups) orders.push_back(n.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12, 24}));
}

TEST(NormalSubgroups, MatchLattice) {
  for (const auto& g : {dicyclic(16).build(), dihedral(24).build(), alt(4), metacyclic(7, 6, 3).build()}) {
    oracle::Lattice lattice(elements_of(g));
    std::set<std::vector<Permutation>> expected;
    for (auto h : lattice.subgroups())
      if (lattice.is_normal(h)) {
        const auto m = lattice.members(h);
        expected.insert({m.begin(), m.end()});
      }
    std::set<std::vector<Permutation>> got;
    for (const auto& n : normal_subgroups(g).subgroups) got.insert(members_of(n));
    EXPECT_EQ(got, expected);
  }
}

TEST(NormalSubgroups, CapTruncates) {
  const auto scan = normal_subgroups(elementary_abelian(2, 5).build(), 8);
  EXPECT_FALSE(scan.complete);
  EXPECT_LE(scan.subgroups.size(), 8u);
}

TEST(Composition, Examples) {
  for (const auto& f : composition_factors(sym(4))) {
    EXPECT_TRUE(f.abelian);
    EXPECT_TRUE(is_prime(f.order));
  }
  const auto a5 = composition_factors(alt(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order, 60u);
  EXPECT_FALSE(a5[0].abelian);
  EXPECT_TRUE(has_sl32_factor(psl2(7).build()));
  EXPECT_FALSE(has_sl32_factor(alt(5)));
  EXPECT_FALSE(has_sl32_factor(sym(4)));
  const auto a5c2 = composition_factors(direct_product(alternating(5), cyclic(2)).build());
  ASSERT_EQ(a5c2.size(), 2u);
}

TEST(Composition, PSolvable) {
  EXPECT_TRUE(is_p_solvable(sym(4), 2));
  EXPECT_FALSE(is_p_solvable(alt(5), 2));
  EXPECT_FALSE(is_p_solvable(alt(5), 5));
  EXPECT_TRUE(is_p_solvable(alt(5), 7));
  EXPECT_FALSE(is_p_solvable(psl2(7).build(), 3));
}

TEST(MaximalNormal, Examples) {
  EXPECT_EQ(maximal_normal_subgroup(sym(4)).order(), 12u);
  EXPECT_TRUE(maximal_normal_subgroup(alt(5)).is_trivial());
  EXPECT_EQ(maximal_normal_subgroup(cyc(12)).order(), 6u);
}

TEST(Fingerprint, Examples) {
  const auto f = fingerprint(sym(4));
  EXPECT_EQ(f.order, 24u);
  EXPECT_EQ(f.abelianization_order, 2u);
  EXPECT_EQ(fingerprint(sym(3)), fingerprint(dihedral(6).build()));
  EXPECT_FALSE(fingerprint(sym(4)) == fingerprint(dicyclic(24).build()));
}

}  // namespace

namespace {

TEST(LatticeOracle, KnownSubgroupCounts) {
  const std::vector<std::pair<GroupSpec, std::size_t>> cases{
      {elementary_abelian(2, 4), 67}, {symmetric(4), 30}, {dihedral(8), 10}, {cyclic(12), 6}};
  for (const auto& [spec, count] : cases)
    EXPECT_EQ(oracle::Lattice(elements_of(spec.build())).subgroups().size(), count) << spec.name;
}

}  // namespace
