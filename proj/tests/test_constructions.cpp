#include <gtest/gtest.h>

#include "fusionkit/fusionkit.hpp"

using namespace fusionkit;

namespace {

// F_{S1 x S2}(G1 x G2) with S_i the chosen Sylows of the factors.
FusionSystem product_transporter(const ProductCase& c) {
  auto g = direct_product({c.g1, c.g2});
  const Subgroup s1 = sylow_p(Subgroup::whole(c.g1), c.p);
  const Subgroup s2 = sylow_p(Subgroup::whole(c.g2), c.p);
  std::vector<Perm> gens;
  for (const auto& x : s1.element_perms()) gens.push_back(x.shifted(0, g->degree()));
  for (const auto& y : s2.element_perms()) gens.push_back(y.shifted(c.g1->degree(), g->degree()));
  return transporter_fusion(g, subgroup_generated(g, gens), c.p);
}

Subgroup gen(const FusionSystem& f, std::vector<std::vector<int>> perms) {
  std::vector<Perm> ps;
  for (const auto& p : perms) ps.push_back(Perm::from_ints(p));
  return subgroup_generated(f.s_group(), ps);
}

}  // namespace

TEST(Product, EqualsTransporterOfDirectProduct) {
  for (const auto& c : product_suite()) {
    const auto pf = product_fusion(transporter_at(c.g1, c.p), transporter_at(c.g2, c.p));
    const auto t = product_transporter(c);
    EXPECT_TRUE(pf.system == t) << c.name;
    EXPECT_EQ(pf.system.digest_hex(), t.digest_hex()) << c.name;
    EXPECT_TRUE(is_saturated(pf.system).verdict) << c.name;
  }
}

TEST(Product, InnerTimesInnerIsInner) {
  const auto a = inner_fusion(Subgroup::whole(extraspecial_plus(3).group), 3);
  const auto b = inner_fusion(Subgroup::whole(cyclic_group(3)), 3);
  const auto pf = product_fusion(a, b);
  EXPECT_TRUE(pf.system == inner_fusion(pf.system.S(), 3));
}

TEST(Product, PrimeMismatch) {
  try {
    product_fusion(transporter_at(symmetric_group(3), 3), transporter_at(cyclic_group(2), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "prime mismatch");
  }
}

TEST(Product, SwapIsAnIsomorphism) {
  const auto a = transporter_at(symmetric_group(3), 3), b = transporter_at(alternating_group(4), 3);
  EXPECT_TRUE(fusion_isomorphic(product_fusion(a, b).system, product_fusion(b, a).system).has_value());
}

// Quotient by either factor gives the other, at every suite pair.
TEST(Quotient, ByEitherFactorGivesTheOther) {
  for (const auto& c : product_suite()) {
    const auto f1 = transporter_at(c.g1, c.p), f2 = transporter_at(c.g2, c.p);
    const auto pf = product_fusion(f1, f2);
    const auto q1 = quotient_fusion(pf.system, pf.factor1());
    const auto q2 = quotient_fusion(pf.system, pf.factor2());
    EXPECT_TRUE(fusion_isomorphic(q1.system, f2).has_value()) << c.name;
    EXPECT_TRUE(fusion_isomorphic(q2.system, f1).has_value()) << c.name;
    EXPECT_TRUE(is_saturated(q1.system).verdict) << c.name;
    EXPECT_TRUE(is_saturated(q2.system).verdict) << c.name;
  }
}

TEST(Quotient, ByTheWholeGroupIsTrivial) {
  const auto f = s4_d8();
  const auto q = quotient_fusion(f, f.top());
  EXPECT_EQ(q.system.S().order(), 1u);
  EXPECT_EQ(q.system.classes().size(), 1u);
}

TEST(Quotient, S4ByV1IsC2) {
  const auto f = s4_d8();
  const std::size_t v1 = f.id(gen(f, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
  const auto q = quotient_fusion(f, v1);
  EXPECT_EQ(q.system.S().order(), 2u);
  EXPECT_TRUE(fusion_isomorphic(q.system, inner_fusion(Subgroup::whole(cyclic_group(2)), 2)).has_value());
}

TEST(Quotient, WellDefinedAndSurjective) {
  for (const auto& c : saturation_suite()) {
    if (!c.saturated) continue;
    const auto& f = c.system;
    for (std::size_t t = 0; t < f.lattice().size(); ++t) {
      if (!is_strongly_closed(f, t)) continue;
      const auto q = quotient_fusion(f, t);
      const Subgroup& ts = f.object(t);
      for (std::size_t p = 0; p < f.lattice().size(); ++p) {
        if (!ts.is_subgroup_of(f.object(p))) continue;
        const std::size_t pp = q.object_map(f, p);
        std::set<Images> pushed;
        for (const auto& a : f.hom_set(p, f.top())) {
          // alpha(x)+ depends only on x+
          const GroupHom m = q.morphism_map(f, a);
          ASSERT_TRUE(q.system.contains(m)) << c.name;
          Images aligned;
          for (Elem e : q.system.object(pp).elements()) aligned.push_back(m(e));
          pushed.insert(aligned);
        }
        // every morphism out of P+ is some beta+
        for (const auto& b : q.system.hom_set(pp, q.system.top())) EXPECT_TRUE(pushed.count(b.images)) << c.name;
      }
    }
  }
}

TEST(Quotient, RequiresStrongClosure) {
  const auto f = s4_d8();
  const std::size_t z = f.id(gen(f, {{2, 3, 0, 1}}));
  EXPECT_THROW(quotient_fusion(f, z), Error);
}

TEST(Normalizer, FullAutomorphismGroupOfS) {
  const auto f = s4_d8();
  std::vector<Images> k;
  for (const auto& a : automorphisms(f.S())) k.push_back(a.images);
  const auto n = normalizer_subsystem(f, f.top(), k);
  const auto& s = *n.s_group();
  for (std::size_t q = 0; q < n.lattice().size(); ++q)
    for (Elem g = 0; g < s.order(); ++g) {
      Images m;
      for (Elem e : n.object(q).elements()) m.push_back(s.conj(e, g));
      ASSERT_TRUE(n.contains(GroupHom{n.object(q), n.S(), m}));
    }
  EXPECT_TRUE(n == full_normalizer_subsystem(f, f.top()));
}

TEST(Normalizer, CentralizerOfTheCentreOfD8) {
  const auto f = s4_d8();
  const std::size_t z = f.id(gen(f, {{2, 3, 0, 1}}));
  const auto c = centralizer_subsystem(f, z);
  EXPECT_EQ(c.S().order(), 8u);
  // only Z-fixing maps survive: the order-3 automorphism of V1 is gone
  const std::size_t v1 = c.id(gen(f, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
  EXPECT_EQ(c.aut_F_order(v1), 2u);
  EXPECT_TRUE(fusion_isomorphic(c, inner_fusion(c.S(), 2)).has_value());
}

TEST(Normalizer, KMustBeClosed) {
  const auto f = s4_d8();
  const std::size_t v1 = f.id(gen(f, {{1, 0, 3, 2}, {2, 3, 0, 1}}));
  const auto autos = f.aut_F_maps(v1);
  Images order3;
  for (const auto& a : autos) {
    const Images sq = detail::then(a, f.object(v1), a);
    if (sq != f.object(v1).elements() && a != f.object(v1).elements()) order3 = a;
  }
  ASSERT_FALSE(order3.empty());
  EXPECT_THROW(normalizer_subsystem(f, v1, {f.object(v1).elements(), order3}), Error);
}

TEST(FusionIsomorphic, Basics) {
  const auto f = s4_d8();
  EXPECT_TRUE(fusion_isomorphic(f, f).has_value());
  EXPECT_FALSE(fusion_isomorphic(f, inner_fusion(f.S(), 2)).has_value());
  EXPECT_FALSE(fusion_isomorphic(f, transporter_at(alternating_group(4), 2)).has_value());
}

TEST(Witness, ProductChecksAtThree) {
  for (const auto& w : witness_suite(3)) {
    EXPECT_TRUE(w.report.a_strongly_closed) << w.f1 << " x " << w.f2;
    EXPECT_TRUE(w.report.quotient_isomorphic) << w.f1 << " x " << w.f2;
    EXPECT_TRUE(w.report.centralizer_quotient_isomorphic) << w.f1 << " x " << w.f2;
  }
}

TEST(Witness, Hypotheses) {
  const auto c3 = transporter_at(symmetric_group(3), 3);
  EXPECT_THROW(product_witness(c3, c3), Error);
  EXPECT_THROW(witness_suite(2), Error);
}
