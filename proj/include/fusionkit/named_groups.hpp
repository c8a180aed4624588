#pragma once

#include <map>
#include <string>

#include "fusionkit/group_algorithms.hpp"

namespace fusionkit {

/// Declarative description of a group; see io.hpp for the JSON form.
struct GroupDescriptor {
  enum class Kind { permutation, named, direct_product, semidirect };

  Kind kind = Kind::permutation;
  // permutation
  std::size_t degree = 0;
  std::vector<Perm> generators;
  // named
  std::string name;
  std::map<std::string, long> params;
  std::vector<long> invariants;
  // direct_product: the factors; semidirect: {base, actor}
  std::vector<GroupDescriptor> factors;
  // semidirect: action[i] lists the images of the base generators under
  // conjugation by actor generator i
  std::vector<std::vector<Perm>> action;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

  static GroupDescriptor named_group(std::string n, std::map<std::string, long> ps = {}, std::vector<long> inv = {}) {
    GroupDescriptor d;
    d.kind = Kind::named;
    d.name = std::move(n);
    d.params = std::move(ps);
    d.invariants = std::move(inv);
    return d;
  }
};

namespace detail {

inline GroupPtr from_gens(std::size_t degree, std::vector<Perm> gens) {
  return FiniteGroup::generate(std::move(gens), degree);
}

inline std::size_t checked_degree(long n) {
  if (n < 1 || static_cast<std::size_t>(n) > kMaxDegree) throw Error("group parameter out of range");
  return static_cast<std::size_t>(n);
}

inline std::vector<Perm> cycle_gens(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return {Perm(std::move(img))};
}

}  // namespace detail

inline GroupPtr symmetric_group(long n) {
  const auto deg = detail::checked_degree(n);
  if (deg == 1) return detail::from_gens(1, {});
  std::vector<Perm> gens{Perm::from_cycles(deg, {{0, 1}})};
  if (deg > 2) gens.push_back(detail::cycle_gens(deg)[0]);
  return detail::from_gens(deg, gens);
}

inline GroupPtr alternating_group(long n) {
  const auto deg = detail::checked_degree(n);
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < deg; ++i) gens.push_back(Perm::from_cycles(deg, {{0, 1, static_cast<int>(i)}}));
  return detail::from_gens(deg, gens);
}

inline GroupPtr cyclic_group(long n) {
  const auto deg = detail::checked_degree(n);
  if (deg == 1) return detail::from_gens(1, {});
  return detail::from_gens(deg, detail::cycle_gens(deg));
}

/// Abelian group with the given cyclic factor orders, on disjoint cycles.
inline GroupPtr abelian_group(const std::vector<long>& factors) {
  std::size_t deg = 0;
  for (long f : factors) deg += detail::checked_degree(f);
  if (deg == 0) return detail::from_gens(1, {});
  std::vector<Perm> gens;
  std::size_t off = 0;
  for (long f : factors) {
    if (f > 1) gens.push_back(detail::cycle_gens(static_cast<std::size_t>(f))[0].shifted(off, deg));
    off += static_cast<std::size_t>(f);
  }
  return detail::from_gens(deg, gens);
}

inline GroupPtr elementary_abelian_group(long p, long k) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw Error("elementary_abelian requires a prime");
  if (k < 0) throw Error("elementary_abelian requires k >= 0");
  return abelian_group(std::vector<long>(static_cast<std::size_t>(k), p));
}

/// Dihedral group of the given order (2n), acting on an n-gon. Order 4 is the
/// Klein four group on 4 points.
inline GroupPtr dihedral_group(long order) {
  if (order < 2 || order % 2) throw Error("dihedral requires an even order");
  const long n = order / 2;
  if (n == 1) return cyclic_group(2);
  if (n == 2) return detail::from_gens(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  const auto deg = static_cast<std::size_t>(n);
  std::vector<Point> refl(deg);
  for (std::size_t i = 0; i < deg; ++i) refl[i] = static_cast<Point>((deg - i) % deg);
  return detail::from_gens(deg, {detail::cycle_gens(deg)[0], Perm(std::move(refl))});
}

/// The extraspecial group p^{1+2}_+ with its defining generators.
struct Extraspecial {
  GroupPtr group;
  Elem x = 0, y = 0, z = 0;
  std::uint64_t p = 0;
};

/// Realised on the p^2 left cosets of <y>: points (a, d) with x:(a,d)->(a+1,d)
/// and y:(a,d)->(a,d-a). Then z = [x,y] generates the centre.
inline Extraspecial extraspecial_plus(long p) {
  if (p == 2) throw Error("extraspecial_plus requires an odd prime");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error("extraspecial_plus requires an odd prime");
  const auto q = static_cast<std::size_t>(p);
  const std::size_t deg = q * q;
  std::vector<Point> xi(deg), yi(deg);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t d = 0; d < q; ++d) {
      xi[a * q + d] = static_cast<Point>(((a + 1) % q) * q + d);
      yi[a * q + d] = static_cast<Point>(a * q + (d + q - a) % q);
    }
  Extraspecial e;
  e.p = q;
  e.group = detail::from_gens(deg, {Perm(xi), Perm(yi)});
  e.x = e.group->generator_indices()[0];
  e.y = e.group->generator_indices()[1];
  e.z = e.group->commutator(e.x, e.y);
  return e;
}

/// Points of F_p^2 \ {0} are indexed v0*p + v1 - 1.
inline Perm matrix_perm(long p, long a, long b, long c, long d) {
  const auto q = static_cast<std::size_t>(p);
  auto md = [&](long v) { return static_cast<std::size_t>(((v % p) + p) % p); };
  std::vector<Point> img(q * q - 1);
  for (std::size_t v0 = 0; v0 < q; ++v0)
    for (std::size_t v1 = 0; v1 < q; ++v1) {
      if (!v0 && !v1) continue;
      const std::size_t w0 = md(a * static_cast<long>(v0) + b * static_cast<long>(v1));
      const std::size_t w1 = md(c * static_cast<long>(v0) + d * static_cast<long>(v1));
      img[v0 * q + v1 - 1] = static_cast<Point>(w0 * q + w1 - 1);
    }
  return Perm(std::move(img));
}

/// Recovers the 2x2 matrix {a, b, c, d} (columns are the images of e1, e2).
inline std::array<long, 4> perm_matrix(long p, const Perm& m) {
  const auto q = static_cast<std::size_t>(p);
  const std::size_t e1 = m[q - 1];  // (1,0) has index p - 1
  const std::size_t e2 = m[0];      // (0,1) has index 0
  const long c1 = static_cast<long>(e1 + 1), c2 = static_cast<long>(e2 + 1);
  return {c1 / p, c2 / p, c1 % p, c2 % p};
}

inline GroupPtr general_linear_2(long p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw Error("gl2 requires a prime field");
  long g = 2;
  // primitive root
  for (; g < p; ++g) {
    long v = 1, k = 0;
    do {
      v = v * g % p;
      ++k;
    } while (v != 1);
    if (k == p - 1) break;
  }
  if (p == 2) g = 1;
  return detail::from_gens(static_cast<std::size_t>(p * p - 1),
                           {matrix_perm(p, g, 0, 0, 1), matrix_perm(p, -1, 1, -1, 0)});
}

inline GroupPtr special_linear_2(long p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw Error("sl2 requires a prime field");
  return detail::from_gens(static_cast<std::size_t>(p * p - 1), {matrix_perm(p, 1, 1, 0, 1), matrix_perm(p, 1, 0, 1, 1)});
}

inline GroupPtr direct_product(const std::vector<GroupPtr>& factors) {
  std::size_t deg = 0;
  for (const auto& f : factors) deg += f->degree();
  if (deg > kMaxDegree) throw Error("direct product degree too large");
  std::vector<Perm> gens;
  std::size_t off = 0;
  for (const auto& f : factors) {
    for (const auto& g : f->generators()) gens.push_back(g.shifted(off, deg));
    off += f->degree();
  }
  return detail::from_gens(std::max<std::size_t>(deg, 1), gens);
}

/// Base ⋊ Actor acting on the elements of Base (holomorph action) together with
/// the actor's own points. `action[i]` gives the images of base's generators
/// under conjugation by actor generator i.
inline GroupPtr semidirect_product(const GroupPtr& base, const GroupPtr& actor, const std::vector<std::vector<Perm>>& action) {
  if (action.size() != actor->generators().size()) throw Error("semidirect: one action entry per actor generator required");
  const std::size_t nb = base->order();
  const std::size_t deg = nb + actor->degree();
  if (deg > kMaxDegree) throw Error("semidirect product degree too large");
  const auto whole = Subgroup::whole(base);
  const auto& bgen = base->generator_indices();
  std::vector<Perm> gens;
  for (Elem b : bgen) {
    std::vector<Point> img(deg);
    std::iota(img.begin(), img.end(), Point{0});
    for (Elem x = 0; x < nb; ++x) img[x] = static_cast<Point>(base->mul(x, b));
    gens.emplace_back(std::move(img));
  }
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i].size() != bgen.size()) throw Error("semidirect: action entry must image every base generator");
    std::vector<Elem> images;
    for (const auto& p : action[i]) images.push_back(base->index(p));
    auto h = extend_hom(base, bgen, whole, images);
    if (!h || h->domain.order() != nb || !h->is_injective())
      throw Error("semidirect: action data is not an automorphism of the base");
    std::vector<Point> img(deg);
    for (Elem x = 0; x < nb; ++x) img[x] = static_cast<Point>((*h)(x));
    const auto& a = actor->generators()[i];
    for (std::size_t j = 0; j < actor->degree(); ++j) img[nb + j] = static_cast<Point>(nb + a[j]);
    gens.emplace_back(std::move(img));
  }
  auto g = detail::from_gens(deg, gens);
  if (g->order() != nb * actor->order())
    throw Error("semidirect: action data does not define a homomorphism into Aut(base)");
  return g;
}

/// Semidihedral group of order 2^n: <a, b | a^(2^(n-1)), b^2, b a b = a^(2^(n-2)-1)>.
inline GroupPtr semidihedral_group(long order) {
  if (order < 16 || !is_p_power(static_cast<std::uint64_t>(order), 2)) throw Error("semidihedral requires order 2^n, n >= 4");
  const long m = order / 2;
  auto base = cyclic_group(m);
  auto actor = cyclic_group(2);
  const auto& a = base->generators()[0];
  return semidirect_product(base, actor, {{a.pow(m / 2 - 1)}});
}

/// p^{1+2}_+ extended by the involution x -> x^-1, y -> y^-1 (which fixes z).
inline GroupPtr extraspecial_inverted(long p) {
  const Extraspecial e = extraspecial_plus(p);
  const auto& g = *e.group;
  return semidirect_product(e.group, cyclic_group(2), {{g.element(g.inv(e.x)), g.element(g.inv(e.y))}});
}

inline long param(const GroupDescriptor& d, const std::string& key) {
  auto it = d.params.find(key);
  if (it == d.params.end()) throw Error("named group '" + d.name + "' requires parameter '" + key + "'");
  return it->second;
}

inline GroupPtr make_named_group(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupDescriptor::Kind::permutation: {
      for (const auto& g : d.generators)
        if (g.degree() != d.degree) throw Error("generator degree mismatch");
      return detail::from_gens(std::max<std::size_t>(d.degree, 1), d.generators);
    }
    case GroupDescriptor::Kind::direct_product: {
      std::vector<GroupPtr> fs;
      for (const auto& f : d.factors) fs.push_back(make_named_group(f));
      return direct_product(fs);
    }
    case GroupDescriptor::Kind::semidirect: {
      if (d.factors.size() != 2) throw Error("semidirect descriptor needs base and actor");
      return semidirect_product(make_named_group(d.factors[0]), make_named_group(d.factors[1]), d.action);
    }
    case GroupDescriptor::Kind::named:
      break;
  }
  const auto& n = d.name;
  if (n == "symmetric") return symmetric_group(param(d, "n"));
  if (n == "alternating") return alternating_group(param(d, "n"));
  if (n == "cyclic") return cyclic_group(param(d, "n"));
  if (n == "dihedral") return dihedral_group(param(d, "n"));
  if (n == "elementary_abelian") return elementary_abelian_group(param(d, "p"), param(d, "k"));
  if (n == "abelian") return abelian_group(d.invariants);
  if (n == "extraspecial_plus") return extraspecial_plus(param(d, "p")).group;
  if (n == "extraspecial_inverted") return extraspecial_inverted(param(d, "p"));
  if (n == "gl2") return general_linear_2(param(d, "p"));
  if (n == "sl2") return special_linear_2(param(d, "p"));
  if (n == "semidihedral") return semidihedral_group(param(d, "n"));
  throw Error("unsupported group descriptor '" + n + "'");
}

}  // namespace fusionkit
