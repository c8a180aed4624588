#pragma once

#include "fusionkit/classifier.hpp"
#include "fusionkit/named_groups.hpp"

namespace fusionkit {

/// F1 x F2 over S1 x S2 together with the coordinate embeddings.
struct ProductFusion {
  FusionSystem system;
  std::vector<Elem> embed1;  // S1 local element -> (x, 1)
  std::vector<Elem> embed2;  // S2 local element -> (1, y)

  /// Ids of S1 x 1 and 1 x S2.
  std::size_t factor1() const { return system.lattice().id_of_set(embed1); }
  std::size_t factor2() const { return system.lattice().id_of_set(embed2); }
};

/// Generated by all (phi1, phi2). Since (phi1, phi2) is (phi1, id) followed by
/// (id, phi2), it suffices to seed (g, id_{S2}) and (id_{S1}, h) for groupoid
/// generators g, h of the factors; the closure supplies restrictions.
inline ProductFusion product_fusion(const FusionSystem& f1, const FusionSystem& f2) {
  if (f1.prime() != f2.prime()) throw Error("prime mismatch");
  const auto& g1 = *f1.s_group();
  const auto& g2 = *f2.s_group();
  const std::size_t d1 = g1.degree(), d2 = g2.degree(), deg = d1 + d2;
  if (deg > kMaxDegree) throw Error("product degree too large");
  auto pair_perm = [&](Elem a, Elem b) {
    std::vector<Point> img(deg);
    for (std::size_t i = 0; i < d1; ++i) img[i] = g1.element(a)[i];
    for (std::size_t i = 0; i < d2; ++i) img[d1 + i] = static_cast<Point>(d1 + g2.element(b)[i]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (Elem a : g1.generator_indices()) gens.push_back(pair_perm(a, 0));
  for (Elem b : g2.generator_indices()) gens.push_back(pair_perm(0, b));
  GroupPtr s = FiniteGroup::generate(std::move(gens), deg);
  const std::size_t n2 = g2.order();
  std::vector<Elem> pair(g1.order() * n2);
  for (Elem a = 0; a < g1.order(); ++a)
    for (Elem b = 0; b < n2; ++b) pair[a * n2 + b] = s->index(pair_perm(a, b));

  FusionBuilder builder(s, f1.prime());
  auto seed = [&](const FusionSystem& f, std::size_t dom, const Images& g, bool left) {
    const Subgroup& d = f.object(dom);
    const std::size_t other = left ? n2 : g1.order();
    std::vector<std::pair<Elem, Elem>> pairs;
    pairs.reserve(d.order() * other);
    for (std::size_t i = 0; i < d.order(); ++i)
      for (Elem o = 0; o < other; ++o) {
        if (left)
          pairs.emplace_back(pair[d.elements()[i] * n2 + o], pair[g[i] * n2 + o]);
        else
          pairs.emplace_back(pair[o * n2 + d.elements()[i]], pair[o * n2 + g[i]]);
      }
    builder.add_pairs(std::move(pairs), false);
  };
  for (int side = 0; side < 2; ++side) {
    const FusionSystem& f = side == 0 ? f1 : f2;
    for (const auto& c : f.classes()) {
      for (std::size_t k = 1; k < c.members.size(); ++k) seed(f, c.rep, c.transport[k], side == 0);
      for (const auto& a : c.aut_gens) seed(f, c.rep, a, side == 0);
    }
  }
  ProductFusion out{builder.finish(FusionSystem::Backend::generated, "product"), {}, {}};
  for (Elem a = 0; a < g1.order(); ++a) out.embed1.push_back(pair[a * n2]);
  for (Elem b = 0; b < n2; ++b) out.embed2.push_back(pair[b]);
  return out;
}

/// F/T over S/T with the quotient map.
struct QuotientFusion {
  FusionSystem system;
  QuotientGroup theta;
  std::size_t kernel = 0;

  /// Object map P -> P+ for P >= T.
  std::size_t object_map(const FusionSystem& f, std::size_t p) const {
    std::vector<Elem> img;
    for (Elem e : f.object(p).elements()) img.push_back(theta(e));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return system.lattice().id_of_set(img);
  }

  /// alpha -> alpha+ with alpha+(x+) = alpha(x)+.
  GroupHom morphism_map(const FusionSystem& f, const GroupHom& alpha) const {
    const GroupHom a = f.localize(alpha);
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 0; i < a.images.size(); ++i) pairs.emplace_back(theta(a.domain.elements()[i]), theta(a.images[i]));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    GroupHom out{Subgroup(theta.group, {}), Subgroup(theta.group, {}), {}};
    std::vector<Elem> dom, cod;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i && pairs[i].first == pairs[i - 1].first) throw Error("quotient map is not well defined");
      dom.push_back(pairs[i].first);
      out.images.push_back(pairs[i].second);
    }
    for (Elem e : a.codomain.elements()) cod.push_back(theta(e));
    out.domain = Subgroup(theta.group, dom);
    out.codomain = Subgroup(theta.group, cod);
    return out;
  }
};

/// Hom_{F/T}(P+, S+) = {beta+ : beta in Hom_N(PT, S)}, N = N_F(T). For strongly
/// closed T every F-map out of a subgroup containing T preserves T, so N and F
/// agree there; the generators of the classes above T are pushed forward and
/// closed.
inline QuotientFusion quotient_fusion(const FusionSystem& f, std::size_t t) {
  if (!is_strongly_closed(f, t)) throw Error("T is not strongly closed");
  const Subgroup& ts = f.object(t);
  QuotientGroup theta = quotient_group(f.S(), ts);
  FusionBuilder builder(theta.group, f.prime());
  for (const auto& c : f.classes()) {
    const Subgroup& r = f.object(c.rep);
    if (!ts.is_subgroup_of(r)) continue;
    auto push = [&](const Images& g) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (std::size_t i = 0; i < r.order(); ++i) pairs.emplace_back(theta(r.elements()[i]), theta(g[i]));
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first) throw Error("quotient map is not well defined");
      builder.add_pairs(std::move(pairs), false);
    };
    for (std::size_t k = 1; k < c.members.size(); ++k) push(c.transport[k]);
    for (const auto& a : c.aut_gens) push(a);
  }
  return QuotientFusion{builder.finish(FusionSystem::Backend::derived, "quotient"), std::move(theta), t};
}

/// N_S^K(Q) = {g in N_S(Q) : c_g|_Q in K}.
inline Subgroup normalizer_in_S(const FusionSystem& f, std::size_t q, const std::unordered_set<Images, ImagesHash>& k) {
  const Subgroup& qs = f.object(q);
  const auto& amb = *f.s_group();
  const Subgroup n = normalizer(f.S(), qs);
  std::vector<Elem> out;
  for (Elem g : n.elements()) {
    Images c;
    for (Elem e : qs.elements()) c.push_back(amb.conj(e, g));
    if (k.count(c)) out.push_back(g);
  }
  return Subgroup(f.s_group(), std::move(out));
}

/// N_F^K(Q): phi in Hom_F(P, R) such that some phi-bar in Hom_F(PQ, RQ)
/// restricts to phi, maps Q onto Q and restricts to an element of K on Q.
/// K is given as maps on Q (aligned with its elements).
inline FusionSystem normalizer_subsystem(const FusionSystem& f, std::size_t q, std::vector<Images> k) {
  const Subgroup& qs = f.object(q);
  if (k.empty()) throw Error("K not closed under composition");
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  {
    GroupHom probe{qs, qs, {}};
    detail::MapGroup closure(qs);
    for (const auto& a : k) {
      if (a.size() != qs.order()) throw Error("K must consist of automorphisms of Q");
      probe.images = a;
      if (!probe.is_injective() || f.image_bits(a) != qs.bits()) throw Error("K must consist of automorphisms of Q");
      closure.add(a);
      if (closure.elements().size() > k.size()) throw Error("K not closed under composition");
    }
    if (closure.elements().size() != k.size()) throw Error("K not closed under composition");
  }
  const std::unordered_set<Images, ImagesHash> kset(k.begin(), k.end());
  const Subgroup n = normalizer_in_S(f, q, kset);
  const GroupPtr nl = detail::local_copy(n);
  const auto& amb = *f.s_group();
  std::vector<Elem> to_n(amb.order(), static_cast<Elem>(-1));
  for (Elem e : n.elements()) to_n[e] = nl->index(amb.element(e));

  FusionBuilder builder(nl, f.prime());
  const auto& L = f.lattice();
  for (std::size_t p = 0; p < L.size(); ++p) {
    const Subgroup& ps = L[p];
    if (!ps.is_subgroup_of(n)) continue;
    std::vector<Elem> gens = greedy_generators(ps);
    for (Elem e : greedy_generators(qs)) gens.push_back(e);
    const std::size_t pq = L.id_generated(gens);
    const Subgroup& pqs = L[pq];
    std::unordered_set<Images, ImagesHash> admissible;
    const auto& cc = f.class_of(pq);
    for (std::size_t m : cc.members)
      for (const auto& a : cc.autos) {
        const Images psi = f.iso(pq, m, a);
        if (kset.count(detail::restrict_map(pqs, psi, qs))) admissible.insert(detail::restrict_map(pqs, psi, ps));
      }
    const auto& c = f.class_of(p);
    for (std::size_t m : c.members) {
      if (!L[m].is_subgroup_of(n)) continue;
      for (const auto& a : c.autos) {
        const Images phi = f.iso(p, m, a);
        if (!admissible.count(phi)) continue;
        std::vector<std::pair<Elem, Elem>> pairs;
        for (std::size_t i = 0; i < phi.size(); ++i) pairs.emplace_back(to_n[ps.elements()[i]], to_n[phi[i]]);
        builder.add_pairs(std::move(pairs), false);
      }
    }
  }
  return builder.finish(FusionSystem::Backend::derived, "normalizer");
}

/// C_F(Q) = N_F^{1}(Q).
inline FusionSystem centralizer_subsystem(const FusionSystem& f, std::size_t q) {
  return normalizer_subsystem(f, q, {f.object(q).elements()});
}

/// N_F(Q) = N_F^{Aut(Q)}(Q).
inline FusionSystem full_normalizer_subsystem(const FusionSystem& f, std::size_t q) {
  std::vector<Images> k;
  for (auto& a : automorphisms(f.object(q))) k.push_back(std::move(a.images));
  return normalizer_subsystem(f, q, std::move(k));
}

namespace detail {

/// (element order, |x^F|) for every element of S.
inline std::vector<std::pair<std::size_t, std::size_t>> element_signatures(const FusionSystem& f) {
  const auto& g = *f.s_group();
  std::vector<std::pair<std::size_t, std::size_t>> sig(g.order(), {0, 0});
  std::vector<bool> done(g.order(), false);
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    const auto cls = f.f_class_of_element(x);
    for (Elem y : cls) {
      sig[y] = {g.elem_order(y), cls.size()};
      done[y] = true;
    }
  }
  return sig;
}

}  // namespace detail

/// A group isomorphism theta : S -> S' carrying the hom tables of `a` onto
/// those of `b`, if any. Candidate isomorphisms are pruned by element order
/// and F-class size; acceptance checks groupoid generators and class sizes.
inline std::optional<GroupHom> fusion_isomorphic(const FusionSystem& a, const FusionSystem& b,
                                                 std::size_t size_bound = 20000) {
  if (a.S().order() > size_bound || b.S().order() > size_bound) throw Error("fusion_isomorphic: size bound exceeded");
  if (a.S().order() != b.S().order() || a.classes().size() != b.classes().size()) return std::nullopt;
  auto profile = [](const FusionSystem& f) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> v;
    for (const auto& c : f.classes()) v.emplace_back(f.object(c.rep).order(), c.members.size(), c.autos.size());
    std::sort(v.begin(), v.end());
    return v;
  };
  if (profile(a) != profile(b)) return std::nullopt;
  const auto sa = detail::element_signatures(a);
  const auto sb = detail::element_signatures(b);
  const auto& La = a.lattice();
  const auto& Lb = b.lattice();
  std::optional<GroupHom> found;
  auto accept = [&](const GroupHom& th) {
    const std::size_t n = a.S().order();
    std::vector<Elem> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[th.images[i]] = static_cast<Elem>(i);
    auto image_id = [&](std::size_t id) {
      Bits bits(n);
      for (Elem e : La[id].elements()) bits.set(th.images[e]);
      return *Lb.find(bits);
    };
    for (const auto& c : a.classes()) {
      const std::size_t r2 = image_id(c.rep);
      const auto& c2 = b.class_of(r2);
      if (c2.members.size() != c.members.size() || c2.autos.size() != c.autos.size()) return true;
      const Subgroup& r = La[c.rep];
      const Subgroup& rb = Lb[r2];
      auto carried = [&](const Images& g) {
        Images m(rb.order());
        for (std::size_t i = 0; i < rb.order(); ++i) m[i] = th.images[g[r.position(inv[rb.elements()[i]])]];
        return m;
      };
      for (std::size_t k = 1; k < c.members.size(); ++k)
        if (!b.contains_iso(r2, carried(c.transport[k]))) return true;
      for (const auto& g : c.aut_gens)
        if (!b.contains_iso(r2, carried(g))) return true;
    }
    found = th;
    return false;
  };
  for_each_isomorphism(a.S(), b.S(), accept, [&](Elem x, Elem y) { return sa[x] == sb[y]; });
  return found;
}

/// Outcome of the structural checks for F = F1 x F2
/// over P x A.
struct WitnessReport {
  bool a_strongly_closed = false;
  bool quotient_isomorphic = false;
  bool centralizer_quotient_isomorphic = false;
  std::size_t product_order = 0;
  std::size_t product_classes = 0;
  std::string product_digest;

  bool all() const { return a_strongly_closed && quotient_isomorphic && centralizer_quotient_isomorphic; }
};

inline void require_witness_hypotheses(const FusionSystem& f1, const FusionSystem& f2) {
  const std::uint64_t p = f1.prime();
  const Subgroup& s1 = f1.S();
  if (p == 2 || s1.order() != p * p * p || center(s1).order() != p) throw Error("F1 must be over an extraspecial group p^{1+2}");
  for (Elem e : s1.elements())
    if (p % s1.ambient().elem_order(e) != 0) throw Error("F1 must be over an extraspecial group of exponent p");
  if (center(f2.S()).order() != f2.S().order()) throw Error("F2 must be over an abelian group");
  if (!is_saturated(f1).verdict) throw Error("F1 is not saturated");
  if (!is_saturated(f2).verdict) throw Error("F2 is not saturated");
}

/// (i) A is strongly closed in F = F1 x F2, (ii) F/A is isomorphic to F1,
/// (iii) C_F(A)/A is isomorphic to F1.
inline WitnessReport product_witness(const FusionSystem& f1, const FusionSystem& f2, bool check_hypotheses = true) {
  if (f1.prime() != f2.prime()) throw Error("prime mismatch");
  if (check_hypotheses) require_witness_hypotheses(f1, f2);
  const ProductFusion pf = product_fusion(f1, f2);
  const FusionSystem& f = pf.system;
  const std::size_t a = pf.factor2();
  WitnessReport r;
  r.product_order = f.S().order();
  r.product_classes = f.classes().size();
  r.product_digest = f.digest_hex();
  r.a_strongly_closed = is_strongly_closed(f, a);
  if (!r.a_strongly_closed) return r;
  const QuotientFusion q = quotient_fusion(f, a);
  r.quotient_isomorphic = fusion_isomorphic(q.system, f1).has_value();
  const FusionSystem c = centralizer_subsystem(f, a);
  const std::size_t ac = c.id(f.object(a));
  const QuotientFusion qc = quotient_fusion(c, ac);
  r.centralizer_quotient_isomorphic = fusion_isomorphic(qc.system, f1).has_value();
  return r;
}

}  // namespace fusionkit
