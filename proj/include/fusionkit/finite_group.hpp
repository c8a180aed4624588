#pragma once

#include <cstdlib>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fusionkit/perm.hpp"

namespace fusionkit {

using Elem = std::uint32_t;
using Images = std::vector<Elem>;

struct ImagesHash {
  std::size_t operator()(const Images& v) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (Elem x : v) h = hash_mix(h, x);
    return static_cast<std::size_t>(h);
  }
};

/// Largest group the kernel will enumerate. FUSIONKIT_MAX_GROUP_ORDER overrides
/// the default of 200000.
inline std::size_t group_order_cap() {
  if (const char* env = std::getenv("FUSIONKIT_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{200000};
}

/// Fixed-size bitset over element indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t size() const { return n_; }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const Bits&, const Bits&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0x9ae16a3b2f90404fULL;
    for (auto w : words_) h = hash_mix(h, w);
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

/// A finite permutation group with an eagerly enumerated, canonically ordered
/// element list. Elements are sorted lexicographically by image array, so the
/// identity is always index 0.
class FiniteGroup {
 public:
  static constexpr std::size_t kCayleyLimit = 2500;

  static std::shared_ptr<const FiniteGroup> generate(std::vector<Perm> gens, std::size_t degree) {
    return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(gens), degree));
  }

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Elem>& generator_indices() const { return gen_idx_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(Elem i) const { return elements_[i]; }
  static constexpr Elem identity() { return 0; }

  std::optional<Elem> find(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Elem index(const Perm& p) const {
    auto i = find(p);
    if (!i) throw Error("element outside ambient group");
    return *i;
  }

  Elem mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
    return index_.at(elements_[a] * elements_[b]);
  }

  Elem inv(Elem a) const { return inverse_[a]; }
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inverse_[g], x), g); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }

  Elem pow(Elem a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Elem acc = identity();
    Elem base = a;
    while (k) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  std::size_t elem_order(Elem a) const { return orders_[a]; }

  bool has_cayley_table() const { return !table_.empty(); }

 private:
  FiniteGroup(std::vector<Perm> gens, std::size_t degree) : degree_(degree) {
    for (auto& g : gens) {
      if (g.degree() != degree) throw Error("generator degree mismatch");
    }
    // Generators are kept verbatim (constructors index them positionally).
    gens_ = std::move(gens);
    const std::size_t cap = group_order_cap();

    std::vector<Perm> elems{Perm(degree)};
    std::unordered_map<Perm, Elem, PermHash> idx{{elems[0], 0}};
    std::vector<Elem> parent{0};
    std::vector<std::uint32_t> parent_gen{0};
    std::vector<std::vector<Elem>> right(gens_.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        Perm prod = elems[i] * gens_[k];
        auto [it, inserted] = idx.try_emplace(prod, static_cast<Elem>(elems.size()));
        if (inserted) {
          if (elems.size() >= cap) throw Error("group order exceeds the enumeration cap");
          elems.push_back(std::move(prod));
          parent.push_back(static_cast<Elem>(i));
          parent_gen.push_back(static_cast<std::uint32_t>(k));
        }
        right[k].push_back(it->second);
      }
    }

    // Canonical ordering.
    const std::size_t n = elems.size();
    std::vector<Elem> perm_order(n);
    std::iota(perm_order.begin(), perm_order.end(), Elem{0});
    std::sort(perm_order.begin(), perm_order.end(),
              [&](Elem a, Elem b) { return elems[a] < elems[b]; });
    std::vector<Elem> new_of(n);
    for (Elem i = 0; i < n; ++i) new_of[perm_order[i]] = i;

    elements_.reserve(n);
    for (Elem i = 0; i < n; ++i) elements_.push_back(elems[perm_order[i]]);
    for (Elem i = 0; i < n; ++i) index_.emplace(elements_[i], i);
    for (const auto& g : gens_) gen_idx_.push_back(index_.at(g));

    inverse_.resize(n);
    for (Elem i = 0; i < n; ++i) inverse_[i] = index_.at(elements_[i].inverse());

    if (n <= kCayleyLimit) {
      // Columns are filled in BFS order: e_j = e_parent * g_k, so
      // e_i * e_j = (e_i * e_parent) * g_k.
      std::vector<std::vector<Elem>> rmul(gens_.size(), std::vector<Elem>(n));
      for (std::size_t k = 0; k < gens_.size(); ++k)
        for (Elem old = 0; old < n; ++old) rmul[k][new_of[old]] = new_of[right[k][old]];
      table_.assign(n * n, 0);
      for (Elem i = 0; i < n; ++i) table_[static_cast<std::size_t>(i) * n] = i;
      for (Elem old = 1; old < n; ++old) {
        const Elem j = new_of[old];
        const Elem pj = new_of[parent[old]];
        const auto& r = rmul[parent_gen[old]];
        for (Elem i = 0; i < n; ++i)
          table_[static_cast<std::size_t>(i) * n + j] = r[table_[static_cast<std::size_t>(i) * n + pj]];
      }
    }

    orders_.assign(n, 0);
    for (Elem i = 0; i < n; ++i) {
      std::size_t k = 1;
      Elem x = i;
      while (x != identity()) {
        x = mul(x, i);
        ++k;
      }
      orders_[i] = k;
    }
  }

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Elem> gen_idx_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> inverse_;
  std::vector<Elem> table_;
  std::vector<std::size_t> orders_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subset of an ambient FiniteGroup closed under its operation.
class Subgroup {
 public:
  Subgroup() = default;

  /// `elems` must be closed; it is sorted and deduplicated here.
  Subgroup(GroupPtr ambient, std::vector<Elem> elems) : g_(std::move(ambient)), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    bits_ = Bits(g_->order());
    for (Elem e : elems_) bits_.set(e);
  }

  static Subgroup whole(const GroupPtr& g) {
    std::vector<Elem> all(g->order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(g, std::move(all));
  }

  static Subgroup trivial(const GroupPtr& g) { return Subgroup(g, {FiniteGroup::identity()}); }

  const FiniteGroup& ambient() const { return *g_; }
  const GroupPtr& ambient_ptr() const { return g_; }
  const std::vector<Elem>& elements() const { return elems_; }
  const Bits& bits() const { return bits_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(Elem e) const { return bits_.test(e); }
  bool is_trivial() const { return elems_.size() == 1; }

  /// Position of `e` in elements(); e must be a member.
  std::size_t position(Elem e) const {
    return static_cast<std::size_t>(std::lower_bound(elems_.begin(), elems_.end(), e) - elems_.begin());
  }

  bool is_subgroup_of(const Subgroup& other) const {
    return g_ == other.g_ && bits_.is_subset_of(other.bits_);
  }

  std::vector<Perm> element_perms() const {
    std::vector<Perm> out;
    out.reserve(elems_.size());
    for (Elem e : elems_) out.push_back(g_->element(e));
    return out;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.g_ == b.g_ && a.elems_ == b.elems_;
  }

 private:
  GroupPtr g_;
  std::vector<Elem> elems_;
  Bits bits_;
};

/// Closure of `gens` inside the ambient group.
inline Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> gens) {
  Bits seen(g->order());
  std::vector<Elem> elems{FiniteGroup::identity()};
  seen.set(FiniteGroup::identity());
  std::vector<Elem> real;
  for (Elem x : gens)
    if (x != FiniteGroup::identity()) real.push_back(x);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem s : real) {
      Elem y = g->mul(elems[i], s);
      if (!seen.test(y)) {
        seen.set(y);
        elems.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(elems));
}

inline Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Perm>& gens) {
  std::vector<Elem> idx;
  idx.reserve(gens.size());
  for (const auto& p : gens) {
    if (p.degree() != g->degree()) throw Error("element outside ambient group");
    idx.push_back(g->index(p));
  }
  return subgroup_generated(g, std::span<const Elem>(idx));
}

/// Injective-or-not homomorphism stored as an explicit element map. `images[i]`
/// is the codomain-ambient index of the image of `domain.elements()[i]`.
struct GroupHom {
  Subgroup domain;
  Subgroup codomain;
  Images images;

  Elem operator()(Elem x) const { return images[domain.position(x)]; }

  bool is_homomorphism() const {
    const auto& da = domain.ambient();
    const auto& ca = codomain.ambient();
    const auto& el = domain.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = 0; j < el.size(); ++j)
        if ((*this)(da.mul(el[i], el[j])) != ca.mul(images[i], images[j])) return false;
    return true;
  }

  bool is_injective() const {
    Images s = images;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }

  Subgroup image() const { return Subgroup(codomain.ambient_ptr(), images); }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.images == b.images;
  }
};

/// this ∘ other (apply `first` then `second`).
inline GroupHom compose(const GroupHom& second, const GroupHom& first) {
  GroupHom out{first.domain, second.codomain, {}};
  out.images.reserve(first.images.size());
  for (Elem y : first.images) out.images.push_back(second(y));
  return out;
}

inline GroupHom identity_hom(const Subgroup& h) { return GroupHom{h, h, h.elements()}; }

}  // namespace fusionkit
