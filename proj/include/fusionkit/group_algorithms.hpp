#pragma once

#include <functional>
#include <map>

#include "fusionkit/finite_group.hpp"

namespace fusionkit {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

/// The prime whose power is |H|, or 0 when H is trivial or not a p-group.
inline std::uint64_t p_group_prime(const Subgroup& h) {
  std::uint64_t n = h.order();
  if (n == 1) return 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) return is_p_power(n, p) ? p : 0;
  }
  return 0;
}

/// Intersection of two subgroups of one ambient group.
inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem e : a.elements())
    if (b.contains(e)) out.push_back(e);
  return Subgroup(a.ambient_ptr(), std::move(out));
}

inline Subgroup frattini_subgroup(const Subgroup& h);

inline std::vector<Elem> greedy_generators(const Subgroup& h) {
  const auto& g = h.ambient();
  std::vector<Elem> order = h.elements();
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<Elem> gens;
  Subgroup cur = Subgroup::trivial(h.ambient_ptr());
  for (Elem e : order) {
    if (cur.order() == h.order()) break;
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = subgroup_generated(h.ambient_ptr(), gens);
  }
  return gens;
}

/// Small generating set. For p-groups it is minimal (a basis modulo the Frattini
/// subgroup); otherwise it is chosen greedily by descending element order.
inline std::vector<Elem> small_generating_set(const Subgroup& h) {
  if (h.is_trivial()) return {};
  if (p_group_prime(h) == 0) return greedy_generators(h);
  const Subgroup phi = frattini_subgroup(h);
  const auto& g = h.ambient();
  std::vector<Elem> order = h.elements();
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<Elem> gens;
  std::vector<Elem> span_gens = greedy_generators(phi);
  Subgroup cur = phi;
  for (Elem e : order) {
    if (cur.order() == h.order()) break;
    if (cur.contains(e)) continue;
    gens.push_back(e);
    span_gens.push_back(e);
    cur = subgroup_generated(h.ambient_ptr(), span_gens);
  }
  return gens;
}

/// Normal closure of `x` under conjugation by `h` (x, h in one ambient group).
inline Subgroup normal_closure(const Subgroup& h, std::vector<Elem> x) {
  const auto& g = h.ambient();
  const auto hg = greedy_generators(h);
  Subgroup k = subgroup_generated(h.ambient_ptr(), x);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (Elem s : hg) {
        Elem c = g.conj(x[i], s);
        if (!k.contains(c)) {
          x.push_back(c);
          k = subgroup_generated(h.ambient_ptr(), x);
          changed = true;
        }
      }
    }
  }
  return k;
}

inline Subgroup derived_subgroup(const Subgroup& h) {
  const auto gens = greedy_generators(h);
  std::vector<Elem> comms;
  for (Elem a : gens)
    for (Elem b : gens) comms.push_back(h.ambient().commutator(a, b));
  return normal_closure(h, std::move(comms));
}

inline Subgroup frattini_subgroup(const Subgroup& h) {
  const std::uint64_t p = p_group_prime(h);
  if (p == 0) {
    if (h.is_trivial()) return h;
    throw Error("Frattini subgroup is only computed for p-groups");
  }
  std::vector<Elem> gens;
  for (Elem e : h.elements()) gens.push_back(h.ambient().pow(e, static_cast<long long>(p)));
  const Subgroup d = derived_subgroup(h);
  for (Elem e : greedy_generators(d)) gens.push_back(e);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(h.ambient_ptr(), gens);
}

/// C_G(H) = {g in G : h^g = h for all h in H}.
inline Subgroup centralizer(const Subgroup& g, const Subgroup& h) {
  const auto& amb = g.ambient();
  const auto hg = greedy_generators(h);
  std::vector<Elem> out;
  for (Elem x : g.elements()) {
    bool ok = true;
    for (Elem s : hg)
      if (amb.mul(x, s) != amb.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(g.ambient_ptr(), std::move(out));
}

/// N_G(H) = {g in G : H^g = H}.
inline Subgroup normalizer(const Subgroup& g, const Subgroup& h) {
  const auto& amb = g.ambient();
  const auto hg = greedy_generators(h);
  std::vector<Elem> out;
  for (Elem x : g.elements()) {
    bool ok = true;
    for (Elem s : hg)
      if (!h.contains(amb.conj(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(g.ambient_ptr(), std::move(out));
}

inline Subgroup center(const Subgroup& h) { return centralizer(h, h); }

inline bool is_normal(const Subgroup& g, const Subgroup& h) { return normalizer(g, h).order() == g.order(); }

/// Sylow p-subgroup grown by normalizer ascent: while p divides |N_G(H):H|,
/// adjoin an element of order p modulo H.
inline Subgroup sylow_p(const Subgroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error("sylow_p requires a prime");
  const auto& amb = g.ambient();
  Subgroup h = Subgroup::trivial(g.ambient_ptr());
  const std::uint64_t target = p_part(g.order(), p);
  while (h.order() < target) {
    const Subgroup n = normalizer(g, h);
    std::optional<Elem> step;
    for (Elem x : n.elements()) {
      if (h.contains(x)) continue;
      std::uint64_t k = 1;
      Elem y = x;
      while (!h.contains(y)) {
        y = amb.mul(y, x);
        ++k;
      }
      if (k % p == 0) {
        step = amb.pow(x, static_cast<long long>(k / p));
        break;
      }
    }
    if (!step) break;
    std::vector<Elem> gens = greedy_generators(h);
    gens.push_back(*step);
    h = subgroup_generated(g.ambient_ptr(), gens);
  }
  return h;
}

/// O_p(G): the intersection of all Sylow p-subgroups.
inline Subgroup p_core(const Subgroup& g, std::uint64_t p) {
  const Subgroup s = sylow_p(g, p);
  const auto& amb = g.ambient();
  std::vector<Elem> core = s.elements();
  for (Elem x : g.elements()) {
    const Elem xi = amb.inv(x);
    std::vector<Elem> next;
    for (Elem c : core)
      if (s.contains(amb.mul(amb.mul(x, c), xi))) next.push_back(c);
    core.swap(next);
    if (core.size() == 1) break;
  }
  return Subgroup(g.ambient_ptr(), std::move(core));
}

/// Extends generator images to a homomorphism on <gens> by walking the Cayley
/// graph; fails if two paths disagree.
inline std::optional<GroupHom> extend_hom(const GroupPtr& src, std::span<const Elem> gens, const Subgroup& codomain,
                                          std::span<const Elem> images) {
  const auto& a = *src;
  const auto& b = codomain.ambient();
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> img(a.order(), kUnset);
  std::vector<Elem> visited{FiniteGroup::identity()};
  img[FiniteGroup::identity()] = FiniteGroup::identity();
  for (std::size_t i = 0; i < visited.size(); ++i) {
    const Elem s = visited[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem t = a.mul(s, gens[k]);
      const Elem ti = b.mul(img[s], images[k]);
      if (img[t] == kUnset) {
        img[t] = ti;
        visited.push_back(t);
      } else if (img[t] != ti) {
        return std::nullopt;
      }
    }
  }
  Subgroup dom(src, visited);
  GroupHom h{dom, codomain, {}};
  h.images.reserve(dom.order());
  for (Elem e : dom.elements()) h.images.push_back(img[e]);
  return h;
}

/// Per-element compatibility predicate for isomorphism searches: (a, b) may be
/// matched only if it returns true.
using ElementFilter = std::function<bool(Elem, Elem)>;

/// Enumerates isomorphisms A -> B by backtracking over images of a small
/// generating set, pruning by element order, the optional filter, and partial
/// homomorphism checks. `visit` returns false to stop.
inline void for_each_isomorphism(const Subgroup& a, const Subgroup& b, const std::function<bool(const GroupHom&)>& visit,
                                 const ElementFilter& filter = {}) {
  if (a.order() != b.order()) return;
  const auto& ga = a.ambient();
  const auto& gb = b.ambient();
  // Cheap invariant: element order statistics.
  {
    std::map<std::size_t, std::size_t> ca, cb;
    for (Elem e : a.elements()) ++ca[ga.elem_order(e)];
    for (Elem e : b.elements()) ++cb[gb.elem_order(e)];
    if (ca != cb) return;
  }
  const std::vector<Elem> gens = small_generating_set(a);
  if (gens.empty()) {
    visit(GroupHom{a, b, {FiniteGroup::identity()}});
    return;
  }
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y : b.elements())
      if (gb.elem_order(y) == ga.elem_order(gens[i]) && (!filter || filter(gens[i], y))) cand[i].push_back(y);

  std::vector<Elem> chosen(gens.size());
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    for (Elem y : cand[depth]) {
      chosen[depth] = y;
      auto h = extend_hom(a.ambient_ptr(), std::span<const Elem>(gens.data(), depth + 1), b,
                          std::span<const Elem>(chosen.data(), depth + 1));
      if (!h || !h->is_injective()) continue;
      if (depth + 1 == gens.size()) {
        if (h->domain.order() != a.order()) continue;
        if (!visit(*h)) {
          stop = true;
          return;
        }
      } else {
        rec(depth + 1);
      }
      if (stop) return;
    }
  };
  rec(0);
}

inline std::optional<GroupHom> group_isomorphic(const Subgroup& a, const Subgroup& b,
                                                std::size_t size_bound = FiniteGroup::kCayleyLimit * 40) {
  if (a.order() > size_bound || b.order() > size_bound) throw Error("group_isomorphic: size bound exceeded");
  std::optional<GroupHom> found;
  for_each_isomorphism(a, b, [&](const GroupHom& h) {
    found = h;
    return false;
  });
  return found;
}

inline std::optional<GroupHom> group_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  return group_isomorphic(Subgroup::whole(a), Subgroup::whole(b));
}

inline constexpr std::size_t kDefaultAutomorphismBound = 2500;

/// All automorphisms of P (as maps P -> P), sorted by image array.
inline std::vector<GroupHom> automorphisms(const Subgroup& p, std::size_t size_bound = kDefaultAutomorphismBound) {
  if (p.order() > size_bound) throw Error("automorphisms: size bound exceeded");
  std::vector<GroupHom> out;
  for_each_isomorphism(p, p, [&](const GroupHom& h) {
    out.push_back(h);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const GroupHom& x, const GroupHom& y) { return x.images < y.images; });
  return out;
}

/// Distinct inner automorphisms c_g : x -> g^-1 x g, g in P.
inline std::vector<GroupHom> inner_automorphisms(const Subgroup& p) {
  const auto& g = p.ambient();
  std::vector<Images> maps;
  for (Elem x : p.elements()) {
    Images m;
    m.reserve(p.order());
    for (Elem e : p.elements()) m.push_back(g.conj(e, x));
    maps.push_back(std::move(m));
  }
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  std::vector<GroupHom> out;
  for (auto& m : maps) out.push_back(GroupHom{p, p, std::move(m)});
  return out;
}

/// H/N realised as a permutation group on right cosets of N in H.
struct QuotientGroup {
  GroupPtr group;
  Subgroup source;
  std::vector<Elem> theta;       // aligned with source.elements()
  std::vector<Elem> preimage;    // one preimage in source for each quotient element
  std::vector<std::uint32_t> coset_of;  // aligned with source.elements()

  Elem operator()(Elem x) const { return theta[source.position(x)]; }
};

inline QuotientGroup quotient_group(const Subgroup& h, const Subgroup& n) {
  const auto& amb = h.ambient();
  if (!n.is_subgroup_of(h)) throw Error("quotient: kernel is not a subgroup");
  if (!is_normal(h, n)) throw Error("quotient: kernel is not normal");
  const auto& el = h.elements();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset(el.size(), kUnset);
  std::vector<Elem> reps;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (coset[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(el[i]);
    for (Elem x : n.elements()) coset[h.position(amb.mul(x, el[i]))] = c;
  }
  const std::size_t k = reps.size();
  auto action = [&](Elem g) {
    std::vector<Point> img(k);
    for (std::size_t c = 0; c < k; ++c) img[c] = static_cast<Point>(coset[h.position(amb.mul(reps[c], g))]);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (Elem g : small_generating_set(h)) gens.push_back(action(g));
  QuotientGroup q{FiniteGroup::generate(gens, k), h, {}, {}, coset};
  q.theta.reserve(el.size());
  for (Elem e : el) q.theta.push_back(q.group->index(action(e)));
  q.preimage.assign(q.group->order(), 0);
  std::vector<bool> has(q.group->order(), false);
  for (std::size_t i = 0; i < el.size(); ++i)
    if (!has[q.theta[i]]) {
      has[q.theta[i]] = true;
      q.preimage[q.theta[i]] = el[i];
    }
  return q;
}

/// Group given by an explicit list of permutations of one degree (e.g. a set of
/// automorphisms viewed as permutations of a subgroup's positions).
inline GroupPtr group_from_perms(const std::vector<Perm>& perms, std::size_t degree) {
  return FiniteGroup::generate(perms, degree);
}

}  // namespace fusionkit
