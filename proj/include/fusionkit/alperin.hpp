#pragma once

#include "fusionkit/classifier.hpp"

namespace fusionkit {

/// psi in Aut_F(q) carrying `from` onto `to`; psi is a map on q.
struct AlperinStep {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t q = 0;
  Images psi;
};

struct AlperinDecomposition {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<AlperinStep> chain;
};

struct VerifyResult {
  bool ok = true;
  char clause = 0;  // 'a', 'b' or 'c' when !ok
  std::string message;
};

namespace detail {

struct AlperinMoves {
  std::vector<std::size_t> fcr;           // decreasing id
  std::vector<std::vector<Images>> auts;  // Aut_F(fcr[i]) as maps, sorted
};

inline AlperinMoves alperin_moves(const FusionSystem& F) {
  AlperinMoves m;
  m.fcr = fcr_objects(F);
  std::reverse(m.fcr.begin(), m.fcr.end());
  for (std::size_t q : m.fcr) m.auts.push_back(F.aut_F_maps(q));
  return m;
}

struct AlperinNode {
  Images composite;  // P -> current, aligned with P
  std::size_t at;
  std::size_t parent;
  std::size_t move_q;
  std::size_t move_aut;
};

/// Breadth-first search over (current subgroup, composite so far). Stops at
/// `goal` when given, otherwise explores everything reachable.
inline std::vector<AlperinNode> alperin_bfs(const FusionSystem& F, const AlperinMoves& mv, std::size_t p,
                                            const Images* goal, std::size_t* hit) {
  const Subgroup& ps = F.object(p);
  std::vector<AlperinNode> nodes{{ps.elements(), p, 0, 0, 0}};
  std::unordered_set<Images, ImagesHash> seen{ps.elements()};
  if (goal && *goal == ps.elements()) {
    *hit = 0;
    return nodes;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t at = nodes[i].at;
    for (std::size_t k = 0; k < mv.fcr.size(); ++k) {
      const Subgroup& qs = F.object(mv.fcr[k]);
      if (!F.object(at).is_subgroup_of(qs)) continue;
      for (std::size_t j = 0; j < mv.auts[k].size(); ++j) {
        const Images& psi = mv.auts[k][j];
        Images next(nodes[i].composite.size());
        for (std::size_t t = 0; t < next.size(); ++t) next[t] = psi[qs.position(nodes[i].composite[t])];
        if (!seen.insert(next).second) continue;
        const std::size_t to = *F.lattice().find(F.image_bits(next));
        nodes.push_back(AlperinNode{std::move(next), to, i, k, j});
        if (goal && nodes.back().composite == *goal) {
          *hit = nodes.size() - 1;
          return nodes;
        }
      }
    }
  }
  return nodes;
}

inline AlperinDecomposition alperin_path(const FusionSystem& F, const AlperinMoves& mv,
                                         const std::vector<AlperinNode>& nodes, std::size_t p, std::size_t leaf) {
  AlperinDecomposition d;
  d.source = p;
  d.target = nodes[leaf].at;
  for (std::size_t i = leaf; i != 0; i = nodes[i].parent) {
    const auto& n = nodes[i];
    d.chain.push_back(AlperinStep{nodes[n.parent].at, n.at, mv.fcr[n.move_q], mv.auts[n.move_q][n.move_aut]});
  }
  std::reverse(d.chain.begin(), d.chain.end());
  (void)F;
  return d;
}

}  // namespace detail

/// Factors an F-isomorphism through automorphisms of F^{fcr} objects.
/// The fcr objects are explored in decreasing order, automorphisms in image
/// array order, so chains are deterministic and of minimal length.
inline AlperinDecomposition alperin_decompose(const FusionSystem& F, const GroupHom& phi) {
  const GroupHom l = F.localize(phi);
  if (!l.is_injective() || l.image().order() != l.codomain.order() || !F.contains(l))
    throw Error("not an F-isomorphism");
  const std::size_t p = F.lattice().id(l.domain);
  const auto mv = detail::alperin_moves(F);
  std::size_t hit = static_cast<std::size_t>(-1);
  const auto nodes = detail::alperin_bfs(F, mv, p, &l.images, &hit);
  if (hit == static_cast<std::size_t>(-1))
    throw Error("Alperin search exhausted: the theorem's saturation hypothesis fails for this system");
  return detail::alperin_path(F, mv, nodes, p, hit);
}

/// Factors an arbitrary F-map through its image first.
inline AlperinDecomposition alperin_decompose_morphism(const FusionSystem& F, const GroupHom& phi) {
  const GroupHom l = F.localize(phi);
  return alperin_decompose(F, GroupHom{l.domain, l.image(), l.images});
}

/// Every F-isomorphism out of P reached by the search, with its decomposition.
inline std::vector<std::pair<Images, AlperinDecomposition>> alperin_all(const FusionSystem& F, std::size_t p) {
  const auto mv = detail::alperin_moves(F);
  const auto nodes = detail::alperin_bfs(F, mv, p, nullptr, nullptr);
  std::vector<std::pair<Images, AlperinDecomposition>> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out.emplace_back(nodes[i].composite, detail::alperin_path(F, mv, nodes, p, i));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Pure recomputation of the three clauses: (a) each Q_i in F^{fcr};
/// (b) P_{i-1}, P_i <= Q_i, psi_i in Aut_F(Q_i), psi_i(P_{i-1}) = P_i and the
/// chain runs from phi's domain to its image; (c) the composite equals phi.
inline VerifyResult verify_decomposition(const FusionSystem& F, const AlperinDecomposition& d, const GroupHom& phi,
                                         const std::vector<std::size_t>& fcr) {
  const GroupHom l = F.localize(phi);
  const auto& L = F.lattice();
  for (const auto& s : d.chain)
    if (!std::binary_search(fcr.begin(), fcr.end(), s.q))
      return {false, 'a', "Q_i is not fully normalised, centric and radical"};
  std::size_t cur = L.id(l.domain);
  if (d.source != cur) return {false, 'b', "chain does not start at the domain"};
  Images comp = l.domain.elements();
  for (const auto& s : d.chain) {
    const Subgroup& qs = F.object(s.q);
    if (s.from != cur) return {false, 'b', "chain is not contiguous"};
    if (!F.object(s.from).is_subgroup_of(qs) || !F.object(s.to).is_subgroup_of(qs))
      return {false, 'b', "P_i is not contained in Q_i"};
    if (s.psi.size() != qs.order() || !F.contains_iso(s.q, s.psi) || F.image_bits(s.psi) != qs.bits())
      return {false, 'b', "psi_i is not in Aut_F(Q_i)"};
    Images moved = detail::restrict_map(qs, s.psi, F.object(s.from));
    if (F.image_bits(moved) != F.object(s.to).bits()) return {false, 'b', "psi_i(P_{i-1}) != P_i"};
    for (auto& e : comp) e = s.psi[qs.position(e)];
    cur = s.to;
  }
  if (cur != L.id(l.image()) || d.target != cur) return {false, 'b', "chain does not end at the image"};
  if (comp != l.images) return {false, 'c', "composite differs from phi"};
  return {};
}

inline VerifyResult verify_decomposition(const FusionSystem& F, const AlperinDecomposition& d, const GroupHom& phi) {
  return verify_decomposition(F, d, phi, fcr_objects(F));
}

/// generated_fusion seeded with Aut_F(Q) for Q in F^{fcr}.
inline FusionSystem alperin_regenerate(const FusionSystem& F) {
  FusionBuilder b(F.s_group(), F.prime(), F.lattice_ptr());
  for (std::size_t q : fcr_objects(F))
    for (const auto& a : F.class_of(q).aut_gens) b.add(q, F.iso(q, q, a), false);
  return b.finish(FusionSystem::Backend::generated, "alperin regeneration");
}

}  // namespace fusionkit
