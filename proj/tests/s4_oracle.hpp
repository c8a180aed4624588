#pragma once

// Element-level brute force over S4 with D8 = <(0123), (02)>: subgroups of D8,
// F-classes, Aut_F, centric, fully normalised and radical, computed from plain
// arrays with no library code.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace s4_oracle {

using P4 = std::array<int, 4>;
using Set4 = std::set<P4>;

inline P4 mul(const P4& a, const P4& b) {  // apply a, then b
  P4 r{};
  for (int i = 0; i < 4; ++i) r[i] = b[a[i]];
  return r;
}

inline P4 inv(const P4& a) {
  P4 r{};
  for (int i = 0; i < 4; ++i) r[a[i]] = i;
  return r;
}

inline P4 conj(const P4& x, const P4& g) { return mul(mul(inv(g), x), g); }

constexpr P4 kId{0, 1, 2, 3};

inline Set4 closure(const std::vector<P4>& gens) {
  Set4 s{kId};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<P4> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (s.insert(mul(a, g)).second) grew = true;
  }
  return s;
}

inline Set4 conj_set(const Set4& q, const P4& g) {
  Set4 r;
  for (const auto& x : q) r.insert(conj(x, g));
  return r;
}

inline bool subset(const Set4& a, const Set4& b) {
  for (const auto& x : a)
    if (!b.count(x)) return false;
  return true;
}

struct OracleRow {
  Set4 q;
  std::size_t aut_f = 0;
  bool centric = false;
  bool radical = false;
  bool fully_normalised = false;
};

// An automorphism of Q as the tuple of images of Q's sorted elements.
using AutMap = std::vector<P4>;

inline AutMap conj_map(const Set4& q, const P4& g) {
  AutMap m;
  for (const auto& x : q) m.push_back(conj(x, g));
  return m;
}

inline AutMap compose(const Set4& q, const AutMap& a, const AutMap& b) {  // a then b
  std::vector<P4> elems(q.begin(), q.end());
  AutMap r;
  for (const auto& x : a) {
    auto pos = std::find(elems.begin(), elems.end(), x) - elems.begin();
    r.push_back(b[pos]);
  }
  return r;
}

inline std::vector<OracleRow> rows() {
  std::vector<P4> g;
  P4 p = kId;
  do g.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const Set4 s = closure({{1, 2, 3, 0}, {2, 1, 0, 3}});
  std::vector<P4> se(s.begin(), s.end());

  std::vector<Set4> subs;
  for (unsigned mask = 0; mask < (1U << se.size()); ++mask) {
    Set4 h;
    for (std::size_t i = 0; i < se.size(); ++i)
      if (mask >> i & 1U) h.insert(se[i]);
    if (!h.count(kId)) continue;
    bool closed = true;
    for (const auto& a : h)
      for (const auto& b : h)
        if (!h.count(mul(a, b))) closed = false;
    if (closed) subs.push_back(h);
  }

  auto norm_order = [&](const Set4& q) {
    std::size_t n = 0;
    for (const auto& x : se)
      if (conj_set(q, x) == q) ++n;
    return n;
  };

  std::vector<OracleRow> out;
  for (const auto& q : subs) {
    OracleRow r;
    r.q = q;
    std::set<Set4> cls;
    for (const auto& x : g) {
      Set4 c = conj_set(q, x);
      if (subset(c, s)) cls.insert(c);
    }
    std::set<AutMap> autf, inn;
    for (const auto& x : g)
      if (conj_set(q, x) == q) autf.insert(conj_map(q, x));
    for (const auto& x : q) inn.insert(conj_map(q, x));
    r.aut_f = autf.size();
    r.centric = true;
    for (const auto& c : cls)
      for (const auto& x : se) {
        bool centralises = true;
        for (const auto& y : c)
          if (mul(x, y) != mul(y, x)) centralises = false;
        if (centralises && !c.count(x)) r.centric = false;
      }
    r.fully_normalised = true;
    for (const auto& c : cls)
      if (norm_order(c) > norm_order(q)) r.fully_normalised = false;
    // O_2(Aut_F(Q)): elements whose normal closure is a 2-group. Since Inn(Q)
    // is a normal 2-subgroup, O_2(Out_F) = 1 iff O_2(Aut_F) = Inn(Q).
    std::vector<AutMap> a(autf.begin(), autf.end());
    auto aut_inv = [&](const AutMap& m) {
      for (const auto& n : a)
        if (compose(q, m, n) == conj_map(q, kId)) return n;
      return m;
    };
    std::size_t o2 = 0;
    for (const auto& x : a) {
      std::set<AutMap> ncl{conj_map(q, kId)};
      std::vector<AutMap> gens;
      for (const auto& y : a) gens.push_back(compose(q, compose(q, aut_inv(y), x), y));
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<AutMap> cur(ncl.begin(), ncl.end());
        for (const auto& u : cur)
          for (const auto& v : gens)
            if (ncl.insert(compose(q, u, v)).second) grew = true;
      }
      std::size_t n = ncl.size();
      while (n % 2 == 0) n /= 2;
      if (n == 1) ++o2;
    }
    r.radical = o2 == inn.size();
    out.push_back(r);
  }
  return out;
}

inline std::set<Set4> fcr(const std::vector<OracleRow>& table) {
  std::set<Set4> out;
  for (const auto& r : table)
    if (r.fully_normalised && r.centric && r.radical) out.insert(r.q);
  return out;
}

}  // namespace s4_oracle
