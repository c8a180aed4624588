#pragma once

#include <deque>
#include <sstream>
#include <unordered_set>

#include "fusionkit/lattice.hpp"

namespace fusionkit {

namespace detail {

constexpr std::uint32_t kNoPos = static_cast<std::uint32_t>(-1);

inline std::vector<std::uint32_t> position_table(const Subgroup& h) {
  std::vector<std::uint32_t> t(h.ambient().order(), kNoPos);
  const auto& el = h.elements();
  for (std::size_t i = 0; i < el.size(); ++i) t[el[i]] = static_cast<std::uint32_t>(i);
  return t;
}

/// f : A -> B then g : B -> C, maps aligned with positions of A and B.
inline Images then(const Images& f, const Subgroup& b, const Images& g) {
  Images out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[b.position(f[i])];
  return out;
}

inline Images then(const Images& f, const std::vector<std::uint32_t>& bpos, const Images& g) {
  Images out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[bpos[f[i]]];
  return out;
}

/// Inverse of a bijection f : A -> B (aligned with B's positions).
inline Images inverse_map(const Subgroup& a, const Images& f, const Subgroup& b) {
  Images out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[b.position(f[i])] = a.elements()[i];
  return out;
}

inline Images restrict_map(const Subgroup& dom, const Images& f, const Subgroup& sub) {
  Images out;
  out.reserve(sub.order());
  for (Elem e : sub.elements()) out.push_back(f[dom.position(e)]);
  return out;
}

/// Closure of a set of bijections R -> R under composition, seeded by `have`.
class MapGroup {
 public:
  explicit MapGroup(const Subgroup& r) : pos_(position_table(r)) {
    elems_.push_back(r.elements());
    set_.insert(r.elements());
  }

  bool contains(const Images& a) const { return set_.count(a) != 0; }
  const std::vector<Images>& elements() const { return elems_; }
  const std::vector<Images>& generators() const { return gens_; }

  /// Adds `a` as a generator; returns false if it was already a member.
  bool add(const Images& a) {
    if (contains(a)) return false;
    gens_.push_back(a);
    const std::size_t old = elems_.size();
    for (std::size_t i = 0; i < old; ++i) push(then(elems_[i], pos_, a));
    for (std::size_t i = old; i < elems_.size(); ++i)
      for (std::size_t k = 0; k < gens_.size(); ++k) push(then(elems_[i], pos_, gens_[k]));
    return true;
  }

 private:
  void push(Images x) {
    if (set_.insert(x).second) elems_.push_back(std::move(x));
  }

  std::vector<std::uint32_t> pos_;
  std::vector<Images> elems_;
  std::vector<Images> gens_;
  std::unordered_set<Images, ImagesHash> set_;
};

inline GroupPtr local_copy(const Subgroup& s) {
  std::vector<Perm> gens;
  for (Elem e : small_generating_set(s)) gens.push_back(s.ambient().element(e));
  return FiniteGroup::generate(std::move(gens), s.ambient().degree());
}

/// Raw F-class produced by a backend before canonicalisation.
struct RawClass {
  std::size_t rep = 0;
  std::vector<std::size_t> members;
  std::vector<Images> transport;
  std::vector<Images> autos;
};

}  // namespace detail

/// A fusion system over a finite p-group S.
///
/// Objects are the subgroups of S (ids of `lattice()`). The morphisms are stored
/// as a groupoid: for each F-class of subgroups a representative R, one
/// isomorphism R -> M for every member M, and the group Aut_F(R). Every F-map
/// is an isomorphism onto its image followed by an inclusion, so this
/// determines all hom sets. Transports are canonical (least image array in
/// their Aut_F(R)-coset), which makes equality and digests structural.
class FusionSystem {
 public:
  enum class Backend { transporter, generated, derived };

  struct Class {
    std::size_t rep = 0;
    std::vector<std::size_t> members;
    std::vector<Images> transport;      // rep -> members[i]
    std::vector<Images> transport_inv;  // members[i] -> rep
    std::vector<Images> autos;          // Aut_F(rep), sorted
    std::vector<Images> aut_gens;
  };

  const GroupPtr& s_group() const { return s_; }
  const Subgroup& S() const { return whole_; }
  std::uint64_t prime() const { return p_; }
  const SubgroupLattice& lattice() const { return *lat_; }
  const std::shared_ptr<const SubgroupLattice>& lattice_ptr() const { return lat_; }
  const Subgroup& object(std::size_t id) const { return (*lat_)[id]; }
  std::size_t top() const { return lat_->top(); }
  Backend backend() const { return backend_; }
  const std::string& description() const { return description_; }

  const std::vector<Class>& classes() const { return classes_; }
  std::size_t class_index(std::size_t id) const { return class_of_[id]; }
  const Class& class_of(std::size_t id) const { return classes_[class_of_[id]]; }
  std::size_t member_index(std::size_t id) const { return member_pos_[id]; }

  /// Subgroup of S with the same permutations as `h` (which may live in any
  /// group containing S).
  Subgroup localize(const Subgroup& h) const {
    if (h.ambient_ptr() == s_) return h;
    std::vector<Elem> el;
    el.reserve(h.order());
    for (Elem e : h.elements()) el.push_back(local_elem(h.ambient().element(e)));
    return Subgroup(s_, std::move(el));
  }

  GroupHom localize(const GroupHom& h) const {
    if (h.domain.ambient_ptr() == s_ && h.codomain.ambient_ptr() == s_) return h;
    GroupHom out{localize(h.domain), localize(h.codomain), {}};
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 0; i < h.images.size(); ++i)
      pairs.emplace_back(local_elem(h.domain.ambient().element(h.domain.elements()[i])),
                         local_elem(h.codomain.ambient().element(h.images[i])));
    std::sort(pairs.begin(), pairs.end());
    for (auto& pr : pairs) out.images.push_back(pr.second);
    return out;
  }

  Elem local_elem(const Perm& x) const {
    if (x.degree() != s_->degree()) throw Error("object outside S");
    auto i = s_->find(x);
    if (!i) throw Error("object outside S");
    return *i;
  }

  std::size_t id(const Subgroup& h) const { return lat_->id(localize(h)); }

  /// The isomorphism Q -> M, Q and M in one class, obtained as
  /// Q -> rep --a--> rep -> M.
  Images iso(std::size_t q, std::size_t m, const Images& a) const {
    const Class& c = class_of(q);
    const Subgroup& r = object(c.rep);
    const Images& to_rep = c.transport_inv[member_pos_[q]];
    const Images& from_rep = c.transport[member_pos_[m]];
    Images out(to_rep.size());
    for (std::size_t i = 0; i < to_rep.size(); ++i) out[i] = from_rep[r.position(a[r.position(to_rep[i])])];
    return out;
  }

  /// All isomorphisms from object q onto F-conjugates, grouped by target.
  template <class Fn>
  void for_each_iso_from(std::size_t q, Fn&& fn) const {
    const Class& c = class_of(q);
    for (std::size_t m : c.members)
      for (const auto& a : c.autos) fn(m, iso(q, m, a));
  }

  std::vector<GroupHom> hom_set(std::size_t q, std::size_t p) const {
    const Class& c = class_of(q);
    std::vector<GroupHom> out;
    for (std::size_t m : c.members) {
      if (!object(m).is_subgroup_of(object(p))) continue;
      for (const auto& a : c.autos) out.push_back(GroupHom{object(q), object(p), iso(q, m, a)});
    }
    std::sort(out.begin(), out.end(), [](const GroupHom& x, const GroupHom& y) { return x.images < y.images; });
    return out;
  }

  std::vector<GroupHom> hom_set(const Subgroup& q, const Subgroup& p) const { return hom_set(id(q), id(p)); }

  std::size_t hom_count(std::size_t q, std::size_t p) const {
    const Class& c = class_of(q);
    std::size_t n = 0;
    for (std::size_t m : c.members)
      if (object(m).is_subgroup_of(object(p))) ++n;
    return n * c.autos.size();
  }

  /// Aut_F(P), sorted by image array.
  std::vector<GroupHom> aut_F(std::size_t p) const { return hom_set(p, p); }
  std::size_t aut_F_order(std::size_t p) const { return class_of(p).autos.size(); }

  /// Aut_F(P) as bare maps on P, sorted.
  std::vector<Images> aut_F_maps(std::size_t p) const {
    const Class& c = class_of(p);
    std::vector<Images> out;
    out.reserve(c.autos.size());
    for (const auto& a : c.autos) out.push_back(iso(p, p, a));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Aut_S(P) = {c_g|_P : g in N_S(P)} as maps on P, sorted and distinct.
  std::vector<Images> aut_S_maps(std::size_t p) const {
    const Subgroup& ps = object(p);
    const Subgroup n = normalizer(whole_, ps);
    std::vector<Images> out;
    for (Elem g : n.elements()) {
      Images m;
      m.reserve(ps.order());
      for (Elem e : ps.elements()) m.push_back(s_->conj(e, g));
      out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<GroupHom> aut_S(std::size_t p) const {
    std::vector<GroupHom> out;
    for (auto& m : aut_S_maps(p)) out.push_back(GroupHom{object(p), object(p), std::move(m)});
    return out;
  }

  /// P^F, in lattice order.
  std::vector<Subgroup> f_conjugates(std::size_t p) const {
    std::vector<Subgroup> out;
    for (std::size_t m : class_of(p).members) out.push_back(object(m));
    return out;
  }

  /// {phi(x) : phi in Hom_F(<x>, S)}, sorted.
  std::vector<Elem> f_class_of_element(Elem x) const {
    const Elem one[] = {x};
    const std::size_t c = lat_->id_generated(one);
    const std::size_t xi = object(c).position(x);
    std::vector<Elem> out;
    for_each_iso_from(c, [&](std::size_t, const Images& f) { out.push_back(f[xi]); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Membership of an isomorphism q -> (image) given as a map aligned with q.
  bool contains_iso(std::size_t q, const Images& f) const {
    const auto m = lat_->find(image_bits(f));
    if (!m || class_of_[*m] != class_of_[q]) return false;
    const Class& c = class_of(q);
    const Subgroup& ms = object(*m);
    const Images& to_q = c.transport[member_pos_[q]];
    const Images& from_m = c.transport_inv[member_pos_[*m]];
    Images a(to_q.size());
    for (std::size_t i = 0; i < to_q.size(); ++i) a[i] = from_m[ms.position(f[object(q).position(to_q[i])])];
    return std::binary_search(c.autos.begin(), c.autos.end(), a);
  }

  bool contains(const GroupHom& h) const {
    const GroupHom l = localize(h);
    const std::size_t q = lat_->id(l.domain);
    if (!l.is_injective()) return false;
    for (Elem e : l.images)
      if (!l.codomain.contains(e)) return false;
    return contains_iso(q, l.images);
  }

  Bits image_bits(const Images& f) const {
    Bits b(s_->order());
    for (Elem e : f) b.set(e);
    return b;
  }

  /// Sum over all pairs (Q, P) of |Hom_F(Q, P)|.
  std::uint64_t morphism_count() const {
    const auto& subs = lat_->subgroups();
    std::vector<std::uint64_t> up(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i; j < subs.size(); ++j)
        if (subs[i].order() <= subs[j].order() && subs[i].is_subgroup_of(subs[j])) ++up[i];
    std::uint64_t total = 0;
    for (const auto& c : classes_) {
      std::uint64_t reach = 0;
      for (std::size_t m : c.members) reach += up[m];
      total += reach * c.members.size() * c.autos.size();
    }
    return total;
  }

  /// Order-independent hash of the full hom table.
  std::uint64_t digest() const {
    std::uint64_t h = hash_mix(0x5ca1ab1eULL, p_);
    for (const auto& x : s_->elements()) h = hash_mix(h, PermHash{}(x));
    for (const auto& c : classes_) {
      h = hash_mix(h, c.members.size());
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        h = hash_mix(h, c.members[i]);
        h = hash_mix(h, ImagesHash{}(c.transport[i]));
      }
      for (const auto& a : c.autos) h = hash_mix(h, ImagesHash{}(a));
    }
    return h;
  }

  std::string digest_hex() const {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << digest();
    return os.str();
  }

  /// Hom-table equality. Both systems must be over the same permutations.
  friend bool operator==(const FusionSystem& a, const FusionSystem& b) {
    if (a.p_ != b.p_ || a.s_->elements() != b.s_->elements()) return false;
    if (a.classes_.size() != b.classes_.size()) return false;
    for (std::size_t i = 0; i < a.classes_.size(); ++i) {
      const auto& x = a.classes_[i];
      const auto& y = b.classes_[i];
      if (x.members != y.members || x.autos != y.autos || x.transport != y.transport) return false;
    }
    return true;
  }

  /// For transporter systems: some g in G with c_g|_Q equal to the morphism.
  std::optional<Perm> transporter_witness(const GroupHom& h) const {
    if (!transporter_group_) return std::nullopt;
    const GroupHom l = localize(h);
    const auto& g = *transporter_group_;
    const auto& amb = g.ambient();
    for (Elem x : g.elements()) {
      const Perm& gx = amb.element(x);
      const Perm gi = gx.inverse();
      bool ok = true;
      for (std::size_t i = 0; i < l.images.size() && ok; ++i) {
        const Perm c = gi * s_->element(l.domain.elements()[i]) * gx;
        auto li = s_->find(c);
        ok = li && *li == l.images[i];
      }
      if (ok) return gx;
    }
    return std::nullopt;
  }

  const std::optional<Subgroup>& transporter_group() const { return transporter_group_; }

  /// Canonicalises raw backend output into a FusionSystem.
  static FusionSystem assemble(GroupPtr s, std::uint64_t p, std::shared_ptr<const SubgroupLattice> lat,
                               std::vector<detail::RawClass> raw, Backend backend, std::string description) {
    FusionSystem f;
    f.s_ = std::move(s);
    f.whole_ = Subgroup::whole(f.s_);
    f.p_ = p;
    f.lat_ = std::move(lat);
    f.backend_ = backend;
    f.description_ = std::move(description);
    const auto& L = *f.lat_;
    for (auto& rc : raw) {
      // sort members (with their transports)
      std::vector<std::size_t> ord(rc.members.size());
      std::iota(ord.begin(), ord.end(), std::size_t{0});
      std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return rc.members[a] < rc.members[b]; });
      if (rc.members[ord[0]] != rc.rep) throw Error("internal: class representative is not minimal");
      Class c;
      c.rep = rc.rep;
      const Subgroup& r = L[c.rep];
      const auto rpos = detail::position_table(r);
      std::sort(rc.autos.begin(), rc.autos.end());
      c.autos = std::move(rc.autos);
      for (std::size_t k : ord) {
        c.members.push_back(rc.members[k]);
        const Images& t = rc.transport[k];
        Images best = t;
        for (const auto& a : c.autos) {
          Images cand = detail::then(a, rpos, t);
          if (cand < best) best = std::move(cand);
        }
        c.transport_inv.push_back(detail::inverse_map(r, best, L[rc.members[k]]));
        c.transport.push_back(std::move(best));
      }
      detail::MapGroup closer(r);
      for (const auto& a : c.autos)
        if (closer.add(a)) c.aut_gens.push_back(a);
      f.classes_.push_back(std::move(c));
    }
    std::sort(f.classes_.begin(), f.classes_.end(), [](const Class& a, const Class& b) { return a.rep < b.rep; });
    f.class_of_.assign(L.size(), 0);
    f.member_pos_.assign(L.size(), 0);
    for (std::size_t ci = 0; ci < f.classes_.size(); ++ci)
      for (std::size_t k = 0; k < f.classes_[ci].members.size(); ++k) {
        f.class_of_[f.classes_[ci].members[k]] = ci;
        f.member_pos_[f.classes_[ci].members[k]] = k;
      }
    return f;
  }

  void set_transporter_group(Subgroup g) { transporter_group_ = std::move(g); }

 private:
  FusionSystem() = default;

  GroupPtr s_;
  Subgroup whole_;
  std::uint64_t p_ = 0;
  std::shared_ptr<const SubgroupLattice> lat_;
  Backend backend_ = Backend::generated;
  std::string description_;
  std::vector<Class> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> member_pos_;
  std::optional<Subgroup> transporter_group_;
};

inline const char* backend_name(FusionSystem::Backend b) {
  switch (b) {
    case FusionSystem::Backend::transporter:
      return "transporter";
    case FusionSystem::Backend::generated:
      return "generated";
    case FusionSystem::Backend::derived:
      return "derived";
  }
  return "?";
}

inline void check_prime_for(const Subgroup& s, std::uint64_t p) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (s.order() > 1 && p_group_prime(s) != p) throw Error("S is not a p-group for the given prime");
}

/// Worklist closure of a set of isomorphisms between subgroups of S.
///
/// Classes merge when an isomorphism joins two of them, and grow their
/// automorphism group when it lands inside one. Every morphism that changes
/// the groupoid has its restrictions to the maximal subgroups of its domain
/// queued; restrictions of composites are composites of restrictions, so this
/// reaches the smallest fusion system containing the seeds.
class FusionBuilder {
 public:
  FusionBuilder(GroupPtr s, std::uint64_t p, std::shared_ptr<const SubgroupLattice> lat = nullptr)
      : s_(std::move(s)), p_(p), lat_(lat ? std::move(lat) : std::make_shared<const SubgroupLattice>(s_)) {
    const Subgroup whole = Subgroup::whole(s_);
    check_prime_for(whole, p_);
    const auto& L = *lat_;
    cls_.resize(L.size());
    mpos_.assign(L.size(), 0);
    for (std::size_t i = 0; i < L.size(); ++i) {
      WClass c{i, {i}, {L[i].elements()}, detail::MapGroup(L[i]), true};
      classes_.push_back(std::move(c));
      cls_[i] = i;
    }
    for (Elem g : small_generating_set(whole)) {
      Images m;
      for (Elem e : whole.elements()) m.push_back(s_->conj(e, g));
      queue_.emplace_back(L.top(), std::move(m));
    }
  }

  const SubgroupLattice& lattice() const { return *lat_; }
  const std::shared_ptr<const SubgroupLattice>& lattice_ptr() const { return lat_; }
  const GroupPtr& s_group() const { return s_; }

  /// Queues an injective map given as (x, phi(x)) pairs over a subgroup of S.
  /// With `validate`, checks it is an injective homomorphism.
  void add_pairs(std::vector<std::pair<Elem, Elem>> pairs, bool validate = true) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<Elem> dom;
    Images img;
    for (auto& [x, y] : pairs) {
      if (!dom.empty() && dom.back() == x) throw Error("generator is not a function");
      dom.push_back(x);
      img.push_back(y);
    }
    const auto id = lat_->find(bits_of(dom));
    if (!id) throw Error("generator domain is not a subgroup of S");
    add(*id, std::move(img), validate);
  }

  void add(std::size_t dom, Images images, bool validate = true) {
    const Subgroup& d = (*lat_)[dom];
    if (images.size() != d.order()) throw Error("generator image list does not match its domain");
    if (validate) {
      for (Elem e : images)
        if (e >= s_->order()) throw Error("generator codomain is not a subgroup of S");
      GroupHom h{d, Subgroup::whole(s_), images};
      if (!h.is_injective()) throw Error("non-injective generator");
      if (!h.is_homomorphism()) throw Error("generator is not a homomorphism");
    }
    queue_.emplace_back(dom, std::move(images));
  }

  /// Runs the closure and canonicalises.
  FusionSystem finish(FusionSystem::Backend backend, std::string description) {
    run();
    std::vector<detail::RawClass> raw;
    for (auto& c : classes_) {
      if (!c.alive) continue;
      raw.push_back(detail::RawClass{c.rep, c.members, c.tau, c.group.elements()});
    }
    return FusionSystem::assemble(s_, p_, lat_, std::move(raw), backend, std::move(description));
  }

 private:
  struct WClass {
    std::size_t rep;
    std::vector<std::size_t> members;
    std::vector<Images> tau;
    detail::MapGroup group;
    bool alive;
  };

  Bits bits_of(std::span<const Elem> el) const {
    Bits b(s_->order());
    for (Elem e : el) b.set(e);
    return b;
  }

  void run() {
    while (!queue_.empty()) {
      auto [u, phi] = std::move(queue_.front());
      queue_.pop_front();
      process(u, std::move(phi));
    }
  }

  void process(std::size_t u, Images phi) {
    const auto& L = *lat_;
    const auto vid = L.find(bits_of(phi));
    if (!vid) throw Error("internal: image of a morphism is not a subgroup");
    std::size_t v = *vid;
    std::size_t cu = cls_[u], cv = cls_[v];
    const Subgroup& U = L[u];
    const Subgroup& V = L[v];
    {
      const Subgroup& Ru = L[classes_[cu].rep];
      const Subgroup& Rv = L[classes_[cv].rep];
      const Images& tu = classes_[cu].tau[mpos_[u]];
      const Images tv_inv = detail::inverse_map(Rv, classes_[cv].tau[mpos_[v]], V);
      Images psi(tu.size());
      for (std::size_t i = 0; i < tu.size(); ++i) psi[i] = tv_inv[V.position(phi[U.position(tu[i])])];
      if (cu == cv) {
        if (!classes_[cu].group.add(psi)) return;
      } else {
        if (classes_[cu].rep > classes_[cv].rep) {
          psi = detail::inverse_map(Ru, psi, Rv);
          std::swap(cu, cv);
        }
        merge(cu, cv, psi);
      }
    }
    for (std::size_t m : L.maximal(u)) queue_.emplace_back(m, detail::restrict_map(U, phi, L[m]));
  }

  /// Absorbs class y into class x along psi : rep_x -> rep_y.
  void merge(std::size_t x, std::size_t y, const Images& psi) {
    const auto& L = *lat_;
    const Subgroup& Rx = L[classes_[x].rep];
    const Subgroup& Ry = L[classes_[y].rep];
    const auto ypos = detail::position_table(Ry);
    WClass& X = classes_[x];
    WClass& Y = classes_[y];
    for (std::size_t j = 0; j < Y.members.size(); ++j) {
      const std::size_t m = Y.members[j];
      X.tau.push_back(detail::then(psi, ypos, Y.tau[j]));
      X.members.push_back(m);
      cls_[m] = x;
      mpos_[m] = X.members.size() - 1;
    }
    const Images psi_inv = detail::inverse_map(Rx, psi, Ry);
    for (const auto& b : Y.group.generators()) {
      Images conj(psi.size());
      for (std::size_t i = 0; i < psi.size(); ++i) conj[i] = psi_inv[ypos[b[ypos[psi[i]]]]];
      X.group.add(conj);
    }
    Y.alive = false;
    Y.members.clear();
    Y.tau.clear();
  }

  GroupPtr s_;
  std::uint64_t p_;
  std::shared_ptr<const SubgroupLattice> lat_;
  std::vector<WClass> classes_;
  std::vector<std::size_t> cls_;
  std::vector<std::size_t> mpos_;
  std::deque<std::pair<std::size_t, Images>> queue_;
};

/// F_S(G): Hom(Q, P) = {c_g : Q^g <= P}.
inline FusionSystem transporter_fusion(const Subgroup& g, const Subgroup& s, std::uint64_t p) {
  if (!is_prime(p)) throw Error("p must be prime");
  if (!s.is_subgroup_of(g) || (s.order() > 1 && p_group_prime(s) != p) || s.order() != p_part(g.order(), p))
    throw Error("S is not a Sylow p-subgroup of G");
  const GroupPtr sl = detail::local_copy(s);
  auto lat = std::make_shared<const SubgroupLattice>(sl);
  const auto& L = *lat;
  const auto& amb = g.ambient();
  // ambient <-> local
  std::vector<Elem> to_amb(sl->order());
  std::unordered_map<Elem, Elem> to_loc;
  for (Elem e = 0; e < sl->order(); ++e) {
    to_amb[e] = amb.index(sl->element(e));
    to_loc.emplace(to_amb[e], e);
  }
  std::vector<bool> done(L.size(), false);
  std::vector<detail::RawClass> raw;
  for (std::size_t q = 0; q < L.size(); ++q) {
    if (done[q]) continue;
    const Subgroup& Q = L[q];
    detail::RawClass rc;
    rc.rep = q;
    std::unordered_map<std::size_t, std::size_t> slot;
    std::unordered_set<Images, ImagesHash> autos;
    Images img(Q.order());
    Bits b(sl->order());
    for (Elem x : g.elements()) {
      bool inside = true;
      b = Bits(sl->order());
      for (std::size_t i = 0; i < Q.order() && inside; ++i) {
        const Elem c = amb.conj(to_amb[Q.elements()[i]], x);
        auto it = to_loc.find(c);
        if (it == to_loc.end()) {
          inside = false;
          break;
        }
        img[i] = it->second;
        b.set(it->second);
      }
      if (!inside) continue;
      const std::size_t m = *L.find(b);
      if (m == q) autos.insert(img);
      if (slot.emplace(m, rc.members.size()).second) {
        rc.members.push_back(m);
        rc.transport.push_back(img);
        done[m] = true;
      }
    }
    rc.autos.assign(autos.begin(), autos.end());
    raw.push_back(std::move(rc));
  }
  auto f = FusionSystem::assemble(sl, p, lat, std::move(raw), FusionSystem::Backend::transporter, "transporter");
  f.set_transporter_group(g);
  return f;
}

inline FusionSystem transporter_fusion(const GroupPtr& g, const Subgroup& s, std::uint64_t p) {
  return transporter_fusion(Subgroup::whole(g), s, p);
}

/// The smallest fusion system over S containing Hom_S and `gens`.
inline FusionSystem generated_fusion(const Subgroup& s, std::uint64_t p, const std::vector<GroupHom>& gens,
                                     std::string description = "generated") {
  check_prime_for(s, p);
  const GroupPtr sl = detail::local_copy(s);
  FusionBuilder b(sl, p);
  for (const auto& h : gens) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 0; i < h.images.size(); ++i) {
      const Perm& x = h.domain.ambient().element(h.domain.elements()[i]);
      const Perm& y = h.codomain.ambient().element(h.images[i]);
      auto lx = sl->find(x);
      if (!lx) throw Error("generator domain is not a subgroup of S");
      auto ly = sl->find(y);
      if (!ly) throw Error("generator codomain is not a subgroup of S");
      pairs.emplace_back(*lx, *ly);
    }
    b.add_pairs(std::move(pairs));
  }
  return b.finish(FusionSystem::Backend::generated, std::move(description));
}

/// Inner fusion system F_S(S).
inline FusionSystem inner_fusion(const Subgroup& s, std::uint64_t p) { return generated_fusion(s, p, {}, "inner"); }

}  // namespace fusionkit
