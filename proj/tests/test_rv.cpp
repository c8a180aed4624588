#include <gtest/gtest.h>

#include "fusionkit/fusionkit.hpp"

using namespace fusionkit;

TEST(RVDescriptor, Rows) {
  EXPECT_EQ(rv_descriptor("rv1").out_order, 72u);
  EXPECT_EQ(rv_descriptor("RV2").out_order, 48u);
  EXPECT_EQ(rv_descriptor("Rv3").out_order, 96u);
  EXPECT_THROW(rv_descriptor("rv4"), Error);
  for (const char* n : {"rv1", "rv2", "rv3"}) {
    std::size_t total = 0;
    for (auto [size, aut] : rv_descriptor(n).profile) total += size;
    EXPECT_EQ(total, 8u) << n;
  }
}

TEST(RVOut, ReferenceGroups) {
  EXPECT_EQ(rv_out_reference("RV1")->order(), 72u);
  EXPECT_EQ(rv_out_reference("RV2")->order(), 48u);
  EXPECT_EQ(rv_out_reference("RV3")->order(), 96u);
  EXPECT_FALSE(group_isomorphic(rv_out_reference("RV2"), direct_product({semidihedral_group(16), cyclic_group(3)})));
}

// Matrix generators live in GL2(7) with the expected orders.
TEST(RVOut, MatrixGroupsHaveTheTableOrders) {
  const long p = 7;
  for (auto [name, order] : {std::pair{"RV1", 72u}, {"RV2", 48u}, {"RV3", 96u}}) {
    std::vector<Perm> gens;
    for (const auto& m : detail::rv_out_generators(name, p)) gens.push_back(matrix_perm(p, m[0], m[1], m[2], m[3]));
    auto g = FiniteGroup::generate(gens, p * p - 1);
    EXPECT_EQ(g->order(), order) << name;
    EXPECT_TRUE(group_isomorphic(g, rv_out_reference(name)).has_value()) << name;
  }
}

TEST(RVOut, SingerCycleHasFullOrder) {
  const auto w = detail::singer_cycle(7);
  EXPECT_EQ(matrix_perm(7, w[0], w[1], w[2], w[3]).order(), 48u);
}

TEST(RVOut, LiftsAreAutomorphisms) {
  const auto e = extraspecial_plus(7);
  for (const auto& m : detail::rv_out_generators("RV3", 7)) {
    const GroupHom h = lift_to_extraspecial(e, m);
    EXPECT_TRUE(h.is_homomorphism());
    EXPECT_TRUE(h.is_injective());
  }
}

class RVBuild : public ::testing::TestWithParam<const char*> {};

TEST_P(RVBuild, MatchesTheTable) {
  const RVResult r = build_rv(GetParam());
  const auto& c = r.certificate;
  EXPECT_TRUE(c.saturated);
  EXPECT_EQ(c.out_order, r.descriptor.out_order);
  EXPECT_TRUE(c.out_type_matches);
  EXPECT_EQ(c.rank2_cr.size(), 8u);
  auto want = r.descriptor.profile;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(c.profile, want);
  EXPECT_TRUE(c.s_centric_radical);
  // only 1 and S are strongly closed among the F-invariant subgroups
  std::vector<std::size_t> orders;
  for (std::size_t id : c.strongly_closed) orders.push_back(r.system.object(id).order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 343}));
  EXPECT_TRUE(r.matches());
}

INSTANTIATE_TEST_SUITE_P(Table, RVBuild, ::testing::Values("rv1", "rv2", "rv3"));
