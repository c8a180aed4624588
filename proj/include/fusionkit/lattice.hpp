#pragma once

#include <unordered_map>

#include "fusionkit/group_algorithms.hpp"

namespace fusionkit {

/// All subgroups of a finite p-group, sorted by (order, element list). Id 0 is
/// the trivial subgroup and the last id is the whole group.
///
/// Enumeration walks up index-p steps: every subgroup K > 1 has a normal
/// maximal subgroup H of index p, so K = H <x> for some x in N(H) with x^p in H.
/// Those steps also give the complete list of maximal subgroups.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupPtr g) : g_(std::move(g)) {
    const Subgroup whole = Subgroup::whole(g_);
    const std::uint64_t p = p_group_prime(whole);
    if (g_->order() > 1 && p == 0) throw Error("subgroup lattice requires a p-group");

    std::vector<Subgroup> found{Subgroup::trivial(g_)};
    std::unordered_map<Bits, std::size_t, BitsHash> idx{{found[0].bits(), 0}};
    std::vector<std::vector<std::size_t>> below(1);
    for (std::size_t i = 0; i < found.size(); ++i) {
      const Subgroup h = found[i];
      if (h.order() == g_->order()) continue;
      const Subgroup n = normalizer(whole, h);
      Bits covered = h.bits();
      for (Elem x : n.elements()) {
        if (covered.test(x)) continue;
        if (!h.contains(g_->pow(x, static_cast<long long>(p)))) continue;
        std::vector<Elem> k = h.elements();
        Elem xi = x;
        for (std::uint64_t j = 1; j < p; ++j, xi = g_->mul(xi, x))
          for (Elem e : h.elements()) k.push_back(g_->mul(e, xi));
        Subgroup ks(g_, std::move(k));
        for (Elem e : ks.elements()) covered.set(e);
        auto [it, inserted] = idx.try_emplace(ks.bits(), found.size());
        if (inserted) {
          found.push_back(std::move(ks));
          below.emplace_back();
        }
        below[it->second].push_back(i);
      }
    }

    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (found[a].order() != found[b].order()) return found[a].order() < found[b].order();
      return found[a].elements() < found[b].elements();
    });
    std::vector<std::size_t> new_id(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;
    subs_.reserve(found.size());
    maximal_.resize(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      subs_.push_back(found[order[i]]);
      for (std::size_t m : below[order[i]]) maximal_[i].push_back(new_id[m]);
      std::sort(maximal_[i].begin(), maximal_[i].end());
    }
    for (std::size_t i = 0; i < subs_.size(); ++i) id_.emplace(subs_[i].bits(), i);
    p_ = p;
  }

  const GroupPtr& group() const { return g_; }
  std::uint64_t prime() const { return p_; }
  std::size_t size() const { return subs_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  std::size_t top() const { return subs_.size() - 1; }
  const std::vector<std::size_t>& maximal(std::size_t i) const { return maximal_[i]; }

  std::optional<std::size_t> find(const Bits& b) const {
    auto it = id_.find(b);
    if (it == id_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t id(const Subgroup& h) const {
    if (h.ambient_ptr() != g_) throw Error("object outside S");
    auto i = find(h.bits());
    if (!i) throw Error("object outside S");
    return *i;
  }

  /// Id of the subgroup whose element set is exactly `elems` (any order).
  std::size_t id_of_set(std::span<const Elem> elems) const {
    Bits b(g_->order());
    for (Elem e : elems) b.set(e);
    auto i = find(b);
    if (!i) throw Error("element set is not a subgroup of S");
    return *i;
  }

  std::size_t id_generated(std::span<const Elem> gens) const { return id(subgroup_generated(g_, gens)); }

 private:
  GroupPtr g_;
  std::uint64_t p_ = 0;
  std::vector<Subgroup> subs_;
  std::vector<std::vector<std::size_t>> maximal_;
  std::unordered_map<Bits, std::size_t, BitsHash> id_;
};

}  // namespace fusionkit
