#pragma once

#include "fusionkit/constructions.hpp"

namespace fusionkit {

/// A named system with its expected saturation verdict.
struct SuiteCase {
  std::string name;
  FusionSystem system;
  bool saturated = true;
};

inline FusionSystem transporter_at(const GroupPtr& g, std::uint64_t p) {
  return transporter_fusion(g, sylow_p(Subgroup::whole(g), p), p);
}

/// F_{D8}(S4) with D8 = <(0123), (02)>, so that V1 = <(01)(23), (02)(13)>.
inline FusionSystem s4_d8() {
  auto g = symmetric_group(4);
  return transporter_fusion(g, subgroup_generated(g, {Perm::from_ints({1, 2, 3, 0}), Perm::from_ints({2, 1, 0, 3})}), 2);
}

/// The system over V4 generated by one automorphism swapping two involutions.
inline FusionSystem v4_swap() {
  auto v4 = dihedral_group(4);
  const Elem gens[] = {v4->generator_indices()[0], v4->generator_indices()[1]};
  const Elem imgs[] = {gens[1], gens[0]};
  auto h = extend_hom(v4, gens, Subgroup::whole(v4), imgs);
  return generated_fusion(Subgroup::whole(v4), 2, {*h}, "V4 swap");
}

/// Realizable systems, plus the one non-saturated system. A4 x S3 has no
/// Sylow V4 x C3 (that is not a p-group), so it appears once per prime.
inline std::vector<SuiteCase> saturation_suite() {
  std::vector<SuiteCase> out;
  out.push_back({"S3 at 3", transporter_at(symmetric_group(3), 3), true});
  out.push_back({"S4 at 2", s4_d8(), true});
  out.push_back({"A4 at 2", transporter_at(alternating_group(4), 2), true});
  out.push_back({"SL2(3) at 2", transporter_at(special_linear_2(3), 2), true});
  out.push_back({"A4xS3 at 2", transporter_at(direct_product({alternating_group(4), symmetric_group(3)}), 2), true});
  out.push_back({"A4xS3 at 3", transporter_at(direct_product({alternating_group(4), symmetric_group(3)}), 3), true});
  out.push_back({"3^{1+2}:2 at 3", transporter_at(extraspecial_inverted(3), 3), true});
  out.push_back({"V4 swap", v4_swap(), false});
  return out;
}

/// Same-prime factor pairs (G1, G2, p) for product laws.
struct ProductCase {
  std::string name;
  GroupPtr g1, g2;
  std::uint64_t p;
};

inline std::vector<ProductCase> product_suite() {
  return {{"S3 x C3 at 3", symmetric_group(3), cyclic_group(3), 3},
          {"A4 x S3 at 2", alternating_group(4), symmetric_group(3), 2},
          {"A4 x S3 at 3", alternating_group(4), symmetric_group(3), 3},
          {"S4 x C2 at 2", symmetric_group(4), cyclic_group(2), 2}};
}

}  // namespace fusionkit
