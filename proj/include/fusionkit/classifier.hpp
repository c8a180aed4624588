#pragma once

#include <unordered_map>

#include "fusionkit/fusion_system.hpp"

namespace fusionkit {

inline bool is_fully_automised(const FusionSystem& F, std::size_t p) {
  const auto aut_s = F.aut_S_maps(p);
  const auto aut_f = F.aut_F_maps(p);
  for (const auto& a : aut_s)
    if (!std::binary_search(aut_f.begin(), aut_f.end(), a)) return false;
  return aut_s.size() == p_part(aut_f.size(), F.prime());
}

inline bool is_fully_centralised(const FusionSystem& F, std::size_t p) {
  const std::size_t mine = centralizer(F.S(), F.object(p)).order();
  for (std::size_t q : F.class_of(p).members)
    if (centralizer(F.S(), F.object(q)).order() > mine) return false;
  return true;
}

inline bool is_fully_normalised(const FusionSystem& F, std::size_t p) {
  const std::size_t mine = normalizer(F.S(), F.object(p)).order();
  for (std::size_t q : F.class_of(p).members)
    if (normalizer(F.S(), F.object(q)).order() > mine) return false;
  return true;
}

/// C_S(Q) = Z(Q) for every Q in P^F.
inline bool is_centric(const FusionSystem& F, std::size_t p) {
  for (std::size_t q : F.class_of(p).members) {
    const Subgroup& qs = F.object(q);
    if (!centralizer(F.S(), qs).is_subgroup_of(qs)) return false;
  }
  return true;
}

/// Aut_F(P) as a permutation group on the positions of P, Inn(P) inside it, and
/// Out_F(P) = Aut_F(P)/Inn(P) as a permutation group on cosets.
struct OutF {
  GroupPtr aut;
  Subgroup inn;
  QuotientGroup out;
};

inline OutF out_F(const FusionSystem& F, std::size_t p) {
  const Subgroup& ps = F.object(p);
  const std::size_t n = ps.order();
  auto as_perm = [&](const Images& a) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(ps.position(a[i]));
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (const auto& g : F.class_of(p).aut_gens) gens.push_back(as_perm(F.iso(p, p, g)));
  GroupPtr aut = FiniteGroup::generate(std::move(gens), n);
  if (aut->order() != F.aut_F_order(p)) throw Error("internal: Aut_F generators do not generate Aut_F");
  std::vector<Elem> inn;
  const auto& amb = *F.s_group();
  for (Elem x : ps.elements()) {
    Images c;
    c.reserve(n);
    for (Elem e : ps.elements()) c.push_back(amb.conj(e, x));
    inn.push_back(aut->index(as_perm(c)));
  }
  Subgroup inn_s = subgroup_generated(aut, inn);
  QuotientGroup out = quotient_group(Subgroup::whole(aut), inn_s);
  return OutF{aut, std::move(inn_s), std::move(out)};
}

/// O_p(Out_F(P)) = 1.
inline bool is_radical(const FusionSystem& F, std::size_t p) {
  const OutF o = out_F(F, p);
  if (o.out.group->order() % F.prime() != 0) return true;
  return p_core(Subgroup::whole(o.out.group), F.prime()).is_trivial();
}

/// An isomorphism phi : Q -> P together with N_phi and, when found, an
/// extension of phi to N_phi.
struct NphiWitness {
  GroupHom phi;
  Subgroup n_phi;
  std::optional<GroupHom> extension;
};

/// Restriction sets {psi|_Q : psi in Hom_F(N, S)} keyed by (N, Q), each
/// restriction remembering one psi (as target member and Aut_F index).
class ExtensionCache {
 public:
  explicit ExtensionCache(const FusionSystem& F) : F_(F) {}

  struct Source {
    std::size_t target;
    std::size_t aut;
  };
  using Table = std::unordered_map<Images, Source, ImagesHash>;

  /// Restrictions to Q of Hom_F(N, S).
  const Table& restrictions(std::size_t n, std::size_t q) {
    const auto key = std::make_pair(n, q);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Table t;
    const Subgroup& ns = F_.object(n);
    const Subgroup& qs = F_.object(q);
    std::vector<std::size_t> qpos;
    for (Elem e : qs.elements()) qpos.push_back(ns.position(e));
    const auto& c = F_.class_of(n);
    for (std::size_t m : c.members)
      for (std::size_t k = 0; k < c.autos.size(); ++k) {
        const Images psi = F_.iso(n, m, c.autos[k]);
        Images r(qpos.size());
        for (std::size_t i = 0; i < qpos.size(); ++i) r[i] = psi[qpos[i]];
        t.try_emplace(std::move(r), Source{m, k});
      }
    return memo_.emplace(key, std::move(t)).first->second;
  }

  GroupHom extension(std::size_t n, const Source& s) const {
    return GroupHom{F_.object(n), F_.S(), F_.iso(n, s.target, F_.class_of(n).autos[s.aut])};
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::size_t, std::size_t>& k) const {
      return static_cast<std::size_t>(hash_mix(k.first, k.second));
    }
  };
  const FusionSystem& F_;
  std::unordered_map<std::pair<std::size_t, std::size_t>, Table, PairHash> memo_;
};

namespace detail {

/// The distinct maps c_g|_Q, g in N_S(Q), with the g inducing each.
inline std::vector<std::pair<Images, std::vector<Elem>>> induced_automorphisms(const FusionSystem& F, std::size_t q) {
  const Subgroup& qs = F.object(q);
  const Subgroup n = normalizer(F.S(), qs);
  const auto& amb = *F.s_group();
  std::vector<std::pair<Images, std::vector<Elem>>> out;
  std::unordered_map<Images, std::size_t, ImagesHash> at;
  for (Elem g : n.elements()) {
    Images c;
    c.reserve(qs.order());
    for (Elem e : qs.elements()) c.push_back(amb.conj(e, g));
    auto [it, inserted] = at.try_emplace(c, out.size());
    if (inserted) out.emplace_back(std::move(c), std::vector<Elem>{});
    out[it->second].second.push_back(g);
  }
  return out;
}

inline Subgroup n_phi_from(const FusionSystem& F, std::size_t q, std::size_t p, const Images& phi,
                           const std::vector<std::pair<Images, std::vector<Elem>>>& induced,
                           const std::unordered_set<Images, ImagesHash>& aut_s_p) {
  const Subgroup& qs = F.object(q);
  const Subgroup& ps = F.object(p);
  const Images phi_inv = inverse_map(qs, phi, ps);
  std::vector<Elem> out;
  Images m(ps.order());
  for (const auto& [cg, gs] : induced) {
    for (std::size_t i = 0; i < ps.order(); ++i) m[i] = phi[qs.position(cg[qs.position(phi_inv[i])])];
    if (aut_s_p.count(m)) out.insert(out.end(), gs.begin(), gs.end());
  }
  return Subgroup(F.s_group(), std::move(out));
}

}  // namespace detail

/// N_phi = {g in N_S(Q) : phi^-1 c_g phi in Aut_S(P)} for an F-isomorphism
/// phi : Q -> P (composition read left to right).
inline Subgroup n_phi(const FusionSystem& F, std::size_t q, std::size_t p, const Images& phi) {
  const auto induced = detail::induced_automorphisms(F, q);
  const auto aut_s = F.aut_S_maps(p);
  const std::unordered_set<Images, ImagesHash> aut_s_set(aut_s.begin(), aut_s.end());
  return detail::n_phi_from(F, q, p, phi, induced, aut_s_set);
}

/// Every phi in Iso_F(Q, P), Q in P^F, extends to some map in Hom_F(N_phi, S).
/// With `evidence`, records one witness per tested phi (failures only if
/// `failures_only`).
inline bool is_receptive(const FusionSystem& F, std::size_t p, ExtensionCache& cache,
                         std::vector<NphiWitness>* evidence = nullptr, bool failures_only = true) {
  const auto aut_s = F.aut_S_maps(p);
  const std::unordered_set<Images, ImagesHash> aut_s_set(aut_s.begin(), aut_s.end());
  const auto& c = F.class_of(p);
  bool ok = true;
  for (std::size_t q : c.members) {
    const auto induced = detail::induced_automorphisms(F, q);
    for (const auto& a : c.autos) {
      const Images phi = F.iso(q, p, a);
      const Subgroup n = detail::n_phi_from(F, q, p, phi, induced, aut_s_set);
      const std::size_t nid = F.lattice().id(n);
      const auto& table = cache.restrictions(nid, q);
      auto it = table.find(phi);
      const bool found = it != table.end();
      if (!found) ok = false;
      if (evidence && (!found || !failures_only)) {
        NphiWitness w{GroupHom{F.object(q), F.object(p), phi}, n, std::nullopt};
        if (found) w.extension = cache.extension(nid, it->second);
        evidence->push_back(std::move(w));
      }
      if (!ok && !evidence) return false;
    }
  }
  return ok;
}

inline bool is_receptive(const FusionSystem& F, std::size_t p) {
  ExtensionCache cache(F);
  return is_receptive(F, p, cache);
}

struct ClassVerdict {
  std::size_t class_rep = 0;
  std::size_t chosen = 0;
  bool fully_automised = false;
  bool receptive = false;
};

struct SaturationReport {
  bool verdict = true;
  std::vector<ClassVerdict> per_class;
  std::optional<std::size_t> counterexample;  // class representative
};

/// Members of P^F ordered by |N_S(M)| descending, then id.
inline std::vector<std::size_t> normaliser_order(const FusionSystem& F, std::size_t p) {
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (std::size_t m : F.class_of(p).members) keyed.emplace_back(normalizer(F.S(), F.object(m)).order(), m);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<std::size_t> out;
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

/// Saturation by definition: every class has a member that is fully automised
/// and receptive. Members are tried in normaliser order (such a member is
/// necessarily fully normalised).
inline SaturationReport is_saturated(const FusionSystem& F) {
  SaturationReport r;
  ExtensionCache cache(F);
  for (const auto& c : F.classes()) {
    ClassVerdict v;
    v.class_rep = c.rep;
    bool found = false;
    const auto cands = normaliser_order(F, c.rep);
    for (std::size_t m : cands) {
      const bool fa = is_fully_automised(F, m);
      const bool rec = fa && is_receptive(F, m, cache);
      if (fa && rec) {
        v = ClassVerdict{c.rep, m, true, true};
        found = true;
        break;
      }
    }
    if (!found) {
      const std::size_t m = cands.front();
      v = ClassVerdict{c.rep, m, is_fully_automised(F, m), is_receptive(F, m, cache)};
      r.verdict = false;
      if (!r.counterexample) r.counterexample = c.rep;
    }
    r.per_class.push_back(v);
  }
  return r;
}

/// F^{fcr}: fully normalised, centric and radical. Centric and radical are
/// class invariants, so they are computed once per class.
inline std::vector<std::size_t> cr_objects(const FusionSystem& F) {
  std::vector<std::size_t> out;
  for (const auto& c : F.classes())
    if (is_centric(F, c.rep) && is_radical(F, c.rep)) out.insert(out.end(), c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> fcr_objects(const FusionSystem& F) {
  std::vector<std::size_t> out;
  for (std::size_t id : cr_objects(F))
    if (is_fully_normalised(F, id)) out.push_back(id);
  return out;
}

/// No element of P is F-conjugate to an element of S - P.
inline bool is_strongly_closed(const FusionSystem& F, std::size_t p) {
  const Subgroup& ps = F.object(p);
  Bits checked(F.s_group()->order());
  for (Elem x : ps.elements()) {
    if (checked.test(x)) continue;
    for (Elem y : F.f_class_of_element(x)) {
      if (!ps.contains(y)) return false;
      checked.set(y);
    }
  }
  return true;
}

/// Every F-isomorphism phi : Q -> Q' extends to some phi-bar in Hom_F(QP, Q'P)
/// with phi-bar(P) = P. Quantifies over all isomorphisms (every F-map is one
/// followed by an inclusion, and an extension to QP serves every codomain).
inline bool is_normal_in_F(const FusionSystem& F, std::size_t p) {
  if (!is_strongly_closed(F, p)) return false;
  const Subgroup& ps = F.object(p);
  const auto& L = F.lattice();
  const Bits pbits = ps.bits();
  for (const auto& c : F.classes()) {
    for (std::size_t q : c.members) {
      const Subgroup& qs = F.object(q);
      std::vector<Elem> gens = greedy_generators(qs);
      for (Elem e : greedy_generators(ps)) gens.push_back(e);
      const std::size_t qp = L.id_generated(gens);
      const Subgroup& qps = F.object(qp);
      std::unordered_set<Images, ImagesHash> ok;
      const auto& cc = F.class_of(qp);
      for (std::size_t m : cc.members)
        for (const auto& a : cc.autos) {
          const Images psi = F.iso(qp, m, a);
          bool keeps = true;
          for (Elem e : ps.elements())
            if (!pbits.test(psi[qps.position(e)])) {
              keeps = false;
              break;
            }
          if (keeps) ok.insert(detail::restrict_map(qps, psi, qs));
        }
      for (const auto& a : c.autos)
        for (std::size_t m : c.members)
          if (!ok.count(F.iso(q, m, a))) return false;
    }
  }
  return true;
}

/// One row of the classification report.
struct ObjectReport {
  std::size_t id = 0;
  bool fully_automised = false;
  bool receptive = false;
  bool centric = false;
  bool radical = false;
  bool fully_normalised = false;
  bool fully_centralised = false;
  bool strongly_closed = false;
};

inline std::vector<ObjectReport> classify(const FusionSystem& F) {
  ExtensionCache cache(F);
  std::vector<ObjectReport> rows(F.lattice().size());
  for (const auto& c : F.classes()) {
    const bool centric = is_centric(F, c.rep);
    const bool radical = is_radical(F, c.rep);
    // a strongly closed subgroup is its own only F-conjugate
    const bool sc = c.members.size() == 1 && is_strongly_closed(F, c.rep);
    for (std::size_t m : c.members) {
      ObjectReport& r = rows[m];
      r.id = m;
      r.centric = centric;
      r.radical = radical;
      r.fully_automised = is_fully_automised(F, m);
      r.receptive = is_receptive(F, m, cache);
      r.fully_normalised = is_fully_normalised(F, m);
      r.fully_centralised = is_fully_centralised(F, m);
      r.strongly_closed = sc;
    }
  }
  return rows;
}

}  // namespace fusionkit
