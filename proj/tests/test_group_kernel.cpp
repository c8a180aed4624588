#include <gtest/gtest.h>

#include <cstdlib>

#include "fusionkit/fusionkit.hpp"

using namespace fusionkit;

TEST(Perm, ProductIsLeftToRight) {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  // apply a then b: 0 -> 1 -> 2
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_EQ(a * a.inverse(), Perm(3));
}

TEST(Perm, ConjugationAndPowers) {
  const Perm x = Perm::from_cycles(4, {{0, 1, 2, 3}});
  const Perm g = Perm::from_cycles(4, {{0, 2}});
  EXPECT_EQ(x.conjugate_by(g), g.inverse() * x * g);
  EXPECT_EQ(x.pow(4), Perm(4));
  EXPECT_EQ(x.pow(-1), x.inverse());
}

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW(Perm::from_ints({0, 0, 1}), Error);
  EXPECT_THROW(Perm::from_ints({0, 3}), Error);
}

TEST(FiniteGroup, OrdersOfNamedGroups) {
  EXPECT_EQ(symmetric_group(4)->order(), 24u);
  EXPECT_EQ(alternating_group(4)->order(), 12u);
  EXPECT_EQ(cyclic_group(7)->order(), 7u);
  EXPECT_EQ(dihedral_group(8)->order(), 8u);
  EXPECT_EQ(dihedral_group(4)->order(), 4u);
  EXPECT_EQ(elementary_abelian_group(2, 3)->order(), 8u);
  EXPECT_EQ(abelian_group({2, 4})->order(), 8u);
  EXPECT_EQ(extraspecial_plus(3).group->order(), 27u);
  EXPECT_EQ(extraspecial_plus(7).group->order(), 343u);
  EXPECT_EQ(general_linear_2(7)->order(), 2016u);
  EXPECT_EQ(special_linear_2(7)->order(), 336u);
  EXPECT_EQ(semidihedral_group(32)->order(), 32u);
  EXPECT_EQ(extraspecial_inverted(3)->order(), 54u);
}

TEST(FiniteGroup, ElementsAreCanonical) {
  auto g = symmetric_group(3);
  EXPECT_EQ(g->element(FiniteGroup::identity()), Perm(3));
  for (Elem i = 0; i + 1 < g->order(); ++i) EXPECT_LT(g->element(i), g->element(i + 1));
  auto h = FiniteGroup::generate({Perm::from_cycles(3, {{0, 1, 2}}), Perm::from_cycles(3, {{0, 1}})}, 3);
  for (Elem i = 0; i < g->order(); ++i) EXPECT_EQ(g->element(i), h->element(i));
}

TEST(FiniteGroup, ExtraspecialStructure) {
  const auto e = extraspecial_plus(5);
  const auto& g = *e.group;
  const Subgroup s = Subgroup::whole(e.group);
  EXPECT_EQ(center(s).order(), 5u);
  EXPECT_TRUE(center(s).contains(e.z));
  for (Elem x = 0; x < g.order(); ++x) EXPECT_EQ(5 % g.elem_order(x), 0u);
  EXPECT_EQ(derived_subgroup(s).order(), 5u);
  EXPECT_EQ(frattini_subgroup(s).order(), 5u);
}

TEST(FiniteGroup, ExtraspecialNeedsOddPrime) {
  EXPECT_THROW(extraspecial_plus(2), Error);
  EXPECT_THROW(extraspecial_plus(9), Error);
}

TEST(FiniteGroup, OrderCapFromEnvironment) {
  ::setenv("FUSIONKIT_MAX_GROUP_ORDER", "100", 1);
  EXPECT_THROW(symmetric_group(5), Error);
  ::unsetenv("FUSIONKIT_MAX_GROUP_ORDER");
  EXPECT_EQ(symmetric_group(5)->order(), 120u);
}

TEST(GroupAlgorithms, SylowNormalizerCentralizer) {
  auto g = symmetric_group(4);
  const Subgroup w = Subgroup::whole(g);
  const Subgroup s = sylow_p(w, 2);
  EXPECT_EQ(s.order(), 8u);
  EXPECT_EQ(normalizer(w, s).order(), 8u);
  EXPECT_EQ(sylow_p(w, 3).order(), 3u);
  EXPECT_EQ(normalizer(w, sylow_p(w, 3)).order(), 6u);
  EXPECT_EQ(center(s).order(), 2u);
  EXPECT_EQ(p_core(w, 2).order(), 4u);
  EXPECT_TRUE(is_normal(w, p_core(w, 2)));
  EXPECT_EQ(centralizer(w, p_core(w, 2)).order(), 4u);
  EXPECT_EQ(derived_subgroup(w).order(), 12u);
}

TEST(GroupAlgorithms, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(Subgroup::whole(dihedral_group(4))).size(), 6u);
  EXPECT_EQ(automorphisms(Subgroup::whole(cyclic_group(8))).size(), 4u);
  EXPECT_EQ(automorphisms(Subgroup::whole(dihedral_group(8))).size(), 8u);
  EXPECT_EQ(automorphisms(Subgroup::whole(elementary_abelian_group(3, 2))).size(), 48u);
  EXPECT_EQ(inner_automorphisms(Subgroup::whole(dihedral_group(8))).size(), 4u);
  for (const auto& a : automorphisms(Subgroup::whole(symmetric_group(3)))) {
    EXPECT_TRUE(a.is_homomorphism());
    EXPECT_TRUE(a.is_injective());
  }
}

TEST(GroupAlgorithms, Isomorphism) {
  EXPECT_TRUE(group_isomorphic(dihedral_group(6), symmetric_group(3)).has_value());
  EXPECT_FALSE(group_isomorphic(cyclic_group(4), dihedral_group(4)).has_value());
  EXPECT_FALSE(group_isomorphic(dihedral_group(16), semidihedral_group(16)).has_value());
  auto h = group_isomorphic(direct_product({cyclic_group(2), cyclic_group(3)}), cyclic_group(6));
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(h->is_homomorphism());
}

TEST(GroupAlgorithms, QuotientGroup) {
  auto g = symmetric_group(4);
  const Subgroup w = Subgroup::whole(g);
  const QuotientGroup q = quotient_group(w, p_core(w, 2));
  EXPECT_EQ(q.group->order(), 6u);
  EXPECT_TRUE(group_isomorphic(q.group, symmetric_group(3)).has_value());
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem y = 0; y < g->order(); ++y) ASSERT_EQ(q(g->mul(x, y)), q.group->mul(q(x), q(y)));
}

TEST(GroupAlgorithms, ExtendHom) {
  auto g = cyclic_group(6);
  const Elem gen = g->generator_indices()[0];
  const Elem gens[] = {gen};
  const Elem ok[] = {g->pow(gen, 5)};
  auto h = extend_hom(g, gens, Subgroup::whole(g), ok);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(h->is_injective());
  // an element of order 4 cannot be the image of one of order 6 in C12
  auto c12 = cyclic_group(12);
  const Elem g12[] = {c12->pow(c12->generator_indices()[0], 2)};
  const Elem bad[] = {c12->pow(c12->generator_indices()[0], 3)};
  EXPECT_FALSE(extend_hom(c12, g12, Subgroup::whole(c12), bad).has_value());
}

TEST(Semidirect, ValidatesAction) {
  auto c3 = cyclic_group(3), c2 = cyclic_group(2);
  const Perm a = c3->generators()[0];
  EXPECT_EQ(semidirect_product(c3, c2, {{a.inverse()}})->order(), 6u);
  // a -> a is fine but a -> 1 is not an automorphism
  EXPECT_THROW(semidirect_product(c3, c2, {{Perm(3)}}), Error);
  // a generator of C3 cannot act by an involution
  EXPECT_THROW(semidirect_product(c3, c3, {{a.inverse()}}), Error);
}

TEST(Lattice, CountsAndMaximals) {
  const SubgroupLattice d8(dihedral_group(8));
  EXPECT_EQ(d8.size(), 10u);
  EXPECT_EQ(d8.maximal(d8.top()).size(), 3u);
  const SubgroupLattice e8(elementary_abelian_group(2, 3));
  EXPECT_EQ(e8.size(), 16u);
  const SubgroupLattice q(extraspecial_plus(3).group);
  EXPECT_EQ(q.size(), 1u + 13u + 4u + 1u);
  for (std::size_t i = 0; i + 1 < q.size(); ++i) EXPECT_LE(q[i].order(), q[i + 1].order());
  EXPECT_THROW(SubgroupLattice(symmetric_group(3)), Error);
}
