#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fusionkit/fusionkit.hpp"

using namespace fusionkit;

namespace {

FusionSystem s4() {
  auto g = symmetric_group(4);
  return transporter_fusion(g, subgroup_generated(g, {Perm::from_ints({1, 2, 3, 0}), Perm::from_ints({2, 1, 0, 3})}), 2);
}

FusionSystem transporter(const GroupPtr& g, std::uint64_t p) {
  return transporter_fusion(g, sylow_p(Subgroup::whole(g), p), p);
}

// Groupoid generators of f as homomorphisms.
std::vector<GroupHom> seeds(const FusionSystem& f) {
  std::vector<GroupHom> out;
  for (const auto& c : f.classes()) {
    const Subgroup& r = f.object(c.rep);
    for (std::size_t k = 1; k < c.members.size(); ++k) out.push_back({r, f.S(), c.transport[k]});
    for (const auto& a : c.aut_gens) out.push_back({r, f.S(), a});
  }
  return out;
}

}  // namespace

TEST(Transporter, S4OverD8) {
  const auto f = s4();
  EXPECT_EQ(f.S().order(), 8u);
  EXPECT_EQ(f.lattice().size(), 10u);
  EXPECT_EQ(f.classes().size(), 7u);
  const Subgroup v1 = subgroup_generated(f.s_group(), {Perm::from_ints({1, 0, 3, 2}), Perm::from_ints({2, 3, 0, 1})});
  EXPECT_EQ(f.aut_F_order(f.id(v1)), 6u);
  EXPECT_EQ(f.hom_count(f.id(v1), f.top()), 6u);
  EXPECT_EQ(f.f_conjugates(f.id(v1)).size(), 1u);
  EXPECT_EQ(f.aut_F_order(f.top()), 4u);
  EXPECT_STREQ(backend_name(f.backend()), "transporter");
}

TEST(Transporter, ElementClasses) {
  const auto f = s4();
  const Elem dbl = f.local_elem(Perm::from_ints({1, 0, 3, 2}));
  const Elem tr = f.local_elem(Perm::from_ints({2, 1, 0, 3}));
  EXPECT_EQ(f.f_class_of_element(dbl).size(), 3u);
  EXPECT_EQ(f.f_class_of_element(tr).size(), 2u);
}

TEST(Transporter, EveryMorphismHasAWitness) {
  const auto f = s4();
  for (std::size_t q = 0; q < f.lattice().size(); ++q)
    for (const auto& h : f.hom_set(q, f.top())) {
      ASSERT_TRUE(h.is_homomorphism());
      ASSERT_TRUE(h.is_injective());
      auto g = f.transporter_witness(h);
      ASSERT_TRUE(g.has_value());
      for (std::size_t i = 0; i < h.images.size(); ++i)
        EXPECT_EQ(f.s_group()->element(h.domain.elements()[i]).conjugate_by(*g), f.s_group()->element(h.images[i]));
    }
}

TEST(Transporter, RejectsNonSylow) {
  auto g = symmetric_group(4);
  const Subgroup c2 = subgroup_generated(g, {Perm::from_ints({1, 0, 2, 3})});
  EXPECT_THROW(transporter_fusion(g, c2, 2), Error);
  EXPECT_THROW(transporter_fusion(g, sylow_p(Subgroup::whole(g), 2), 3), Error);
  EXPECT_THROW(transporter_fusion(g, sylow_p(Subgroup::whole(g), 2), 4), Error);
}

// Def 2.1(a): every S-conjugation is present, inclusions included.
TEST(Axioms, ContainsConjugationsAndInclusions) {
  for (const auto& f : {s4(), transporter(alternating_group(4), 2), transporter(extraspecial_inverted(3), 3)}) {
    const auto& s = *f.s_group();
    for (std::size_t q = 0; q < f.lattice().size(); ++q) {
      const Subgroup& qs = f.object(q);
      for (Elem g = 0; g < s.order(); ++g) {
        Images m;
        for (Elem e : qs.elements()) m.push_back(s.conj(e, g));
        ASSERT_TRUE(f.contains(GroupHom{qs, f.S(), m}));
      }
      for (std::size_t p = 0; p < f.lattice().size(); ++p)
        if (qs.is_subgroup_of(f.object(p))) {
          const auto hs = f.hom_set(q, p);
          EXPECT_TRUE(std::any_of(hs.begin(), hs.end(), [&](const GroupHom& h) { return h.images == qs.elements(); }));
        }
    }
  }
}

// Def 2.1(b): restrictions and composites of morphisms are morphisms.
TEST(Axioms, ClosedUnderRestrictionAndComposition) {
  const auto f = transporter(extraspecial_inverted(3), 3);
  const auto& L = f.lattice();
  for (std::size_t q = 0; q < L.size(); ++q)
    for (const auto& h : f.hom_set(q, f.top())) {
      for (std::size_t m : L.maximal(q)) {
        Images r = detail::restrict_map(f.object(q), h.images, f.object(m));
        ASSERT_TRUE(f.contains(GroupHom{f.object(m), f.S(), r}));
      }
      for (const auto& k : f.hom_set(L.id(h.image()), f.top())) {
        Images c;
        for (Elem e : h.images) c.push_back(k(e));
        ASSERT_TRUE(f.contains(GroupHom{f.object(q), f.S(), c}));
      }
    }
}

TEST(Generated, ReproducesTransporterFromGroupoidGenerators) {
  for (const auto& f : {s4(), transporter(alternating_group(4), 2), transporter(symmetric_group(3), 3),
                        transporter(extraspecial_inverted(3), 3)}) {
    const auto g = generated_fusion(f.S(), f.prime(), seeds(f));
    EXPECT_TRUE(g == f);
    EXPECT_EQ(g.digest(), f.digest());
    EXPECT_EQ(g.morphism_count(), f.morphism_count());
  }
}

TEST(Generated, OrderIndependent) {
  const auto f = transporter(direct_product({alternating_group(4), symmetric_group(3)}), 2);
  auto gens = seeds(f);
  const auto a = generated_fusion(f.S(), 2, gens);
  std::mt19937 rng(12345);
  for (int round = 0; round < 3; ++round) {
    std::shuffle(gens.begin(), gens.end(), rng);
    const auto b = generated_fusion(f.S(), 2, gens);
    EXPECT_TRUE(a == b);
    EXPECT_EQ(a.digest_hex(), b.digest_hex());
  }
}

TEST(Generated, InnerSystem) {
  const auto e = extraspecial_plus(3);
  const auto f = inner_fusion(Subgroup::whole(e.group), 3);
  EXPECT_EQ(f.aut_F_order(f.top()), 9u);
  for (std::size_t q = 0; q < f.lattice().size(); ++q) {
    const auto s = f.aut_S_maps(q);
    EXPECT_EQ(s.size(), f.aut_F_order(q));
  }
}

TEST(Generated, SwapOnKleinFour) {
  auto v4 = dihedral_group(4);
  const Subgroup s = Subgroup::whole(v4);
  const Elem gens[] = {v4->generator_indices()[0], v4->generator_indices()[1]};
  const Elem imgs[] = {gens[1], gens[0]};
  auto h = extend_hom(v4, gens, s, imgs);
  ASSERT_TRUE(h.has_value());
  const auto f = generated_fusion(s, 2, {*h});
  EXPECT_EQ(f.aut_F_order(f.top()), 2u);
  // the swap fuses two of the three order-2 subgroups
  std::size_t fused = 0;
  for (const auto& c : f.classes())
    if (c.members.size() == 2) ++fused;
  EXPECT_EQ(fused, 1u);
}

TEST(Generated, RejectsForeignGenerators) {
  auto g = symmetric_group(4);
  const Subgroup s = sylow_p(Subgroup::whole(g), 2);
  const Subgroup w = Subgroup::whole(g);
  // a 3-cycle is not in S
  const Elem x[] = {g->index(Perm::from_cycles(4, {{0, 1, 2}}))};
  auto h = extend_hom(g, x, w, x);
  ASSERT_TRUE(h.has_value());
  EXPECT_THROW(generated_fusion(s, 2, {*h}), Error);
  EXPECT_THROW(generated_fusion(s, 3, {}), Error);
}

TEST(Digest, StableAcrossBuilds) {
  EXPECT_EQ(s4().digest_hex(), s4().digest_hex());
  EXPECT_NE(s4().digest_hex(), inner_fusion(s4().S(), 2).digest_hex());
}
