#pragma once

#include <array>
#include <cctype>

#include "fusionkit/constructions.hpp"

namespace fusionkit {

/// One row of the table of exotic systems over 7^{1+2}_+.
struct RVDescriptor {
  std::string name;            // "RV1", "RV2", "RV3"
  std::size_t out_order = 0;   // |Out_F(S)|
  std::string out_type;        // printable isomorphism type
  // expected F-classes of rank-2 centric radical subgroups: (class size, |Aut_F(V)|)
  std::vector<std::pair<std::size_t, std::size_t>> profile;
};

inline RVDescriptor rv_descriptor(std::string name) {
  for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (name == "RV1") return {name, 72, "6^2:2", {{2, 2016}, {6, 672}}};
  if (name == "RV2") return {name, 48, "D16x3", {{4, 672}, {4, 672}}};
  if (name == "RV3") return {name, 96, "SD32x3", {{8, 672}}};
  throw Error("unknown RV system '" + name + "' (expected rv1, rv2 or rv3)");
}

namespace detail {

using Mat2 = std::array<long, 4>;  // {a, b, c, d}: columns are the images of e1, e2

inline Mat2 mat_mul(const Mat2& m, const Mat2& n, long p) {
  auto md = [p](long v) { return ((v % p) + p) % p; };
  return {md(m[0] * n[0] + m[1] * n[2]), md(m[0] * n[1] + m[1] * n[3]), md(m[2] * n[0] + m[3] * n[2]),
          md(m[2] * n[1] + m[3] * n[3])};
}

/// Multiplication by a generator of F_{p^2}^* on the basis (1, t), t^2 = r with
/// r a non-square.
inline Mat2 singer_cycle(long p) {
  long r = 2;
  for (;; ++r) {
    bool square = false;
    for (long u = 1; u < p; ++u)
      if (u * u % p == r) square = true;
    if (!square) break;
  }
  const long target = p * p - 1;
  for (long a = 0; a < p; ++a)
    for (long b = 1; b < p; ++b) {
      const Mat2 w{a, r * b % p, b, a};
      Mat2 acc = w;
      long k = 1;
      while (!(acc[0] == 1 && acc[1] == 0 && acc[2] == 0 && acc[3] == 1)) {
        acc = mat_mul(acc, w, p);
        ++k;
      }
      if (k == target) return w;
    }
  throw Error("internal: no Singer cycle found");
}

/// Generators (as matrices on S/Z) of the Out_F(S) subgroup of GL2(p).
inline std::vector<Mat2> rv_out_generators(const std::string& name, long p) {
  if (name == "RV1") {
    long g = 2;
    for (; g < p; ++g) {
      long v = 1, k = 0;
      do {
        v = v * g % p;
        ++k;
      } while (v != 1);
      if (k == p - 1) break;
    }
    return {{g, 0, 0, 1}, {1, 0, 0, g}, {0, 1, 1, 0}};
  }
  const Mat2 w = singer_cycle(p);
  const Mat2 frob{1, 0, 0, p - 1};
  if (name == "RV2") return {mat_mul(w, w, p), frob};
  return {w, frob};
}

}  // namespace detail

/// Lift of a matrix on S/Z to Aut(S): x -> x^a y^c, y -> x^b y^d.
inline GroupHom lift_to_extraspecial(const Extraspecial& e, const detail::Mat2& m) {
  const auto& g = *e.group;
  const Elem imgs[] = {g.mul(g.pow(e.x, m[0]), g.pow(e.y, m[2])), g.mul(g.pow(e.x, m[1]), g.pow(e.y, m[3]))};
  const Elem gens[] = {e.x, e.y};
  auto h = extend_hom(e.group, gens, Subgroup::whole(e.group), imgs);
  if (!h || h->domain.order() != g.order() || !h->is_injective()) throw Error("matrix does not lift to an automorphism");
  return *h;
}

/// Certification of a built system against its table row.
struct RVCertificate {
  bool saturated = false;
  std::size_t out_order = 0;
  bool out_type_matches = false;
  bool s_centric_radical = false;
  std::vector<std::size_t> rank2_cr;                                 // ids
  std::vector<std::pair<std::size_t, std::size_t>> profile;          // (class size, |Aut_F(V)|), sorted
  std::vector<std::size_t> strongly_closed;                          // ids
};

struct RVResult {
  RVDescriptor descriptor;
  FusionSystem system;
  RVCertificate certificate;

  bool matches() const {
    auto want = descriptor.profile;
    std::sort(want.begin(), want.end());
    return certificate.saturated && certificate.out_order == descriptor.out_order && certificate.out_type_matches &&
           certificate.rank2_cr.size() == 8 && certificate.profile == want;
  }
};

/// The reference group for an Out_F(S) type.
inline GroupPtr rv_out_reference(const std::string& name) {
  if (name == "RV1") {
    // C6 wr C2 on 12 points
    std::vector<Point> a(12), b(12), s(12);
    for (int i = 0; i < 12; ++i) {
      a[i] = static_cast<Point>(i < 6 ? (i + 1) % 6 : i);
      b[i] = static_cast<Point>(i < 6 ? i : 6 + (i - 5) % 6);
      s[i] = static_cast<Point>((i + 6) % 12);
    }
    return FiniteGroup::generate({Perm(a), Perm(b), Perm(s)}, 12);
  }
  if (name == "RV2") return direct_product({dihedral_group(16), cyclic_group(3)});
  return direct_product({semidihedral_group(32), cyclic_group(3)});
}

inline RVCertificate certify_rv(const FusionSystem& f, const std::string& name) {
  RVCertificate c;
  c.saturated = is_saturated(f).verdict;
  const std::size_t top = f.top();
  const OutF o = out_F(f, top);
  c.out_order = o.out.group->order();
  c.out_type_matches = group_isomorphic(o.out.group, rv_out_reference(name)).has_value();
  const auto cr = cr_objects(f);
  const std::size_t p = f.prime();
  std::map<std::size_t, std::size_t> per_class;
  for (std::size_t id : cr) {
    if (id == top) c.s_centric_radical = true;
    if (f.object(id).order() == p * p) {
      c.rank2_cr.push_back(id);
      per_class[f.class_index(id)] += 1;
    }
  }
  for (auto [ci, n] : per_class) c.profile.emplace_back(n, f.classes()[ci].autos.size());
  std::sort(c.profile.begin(), c.profile.end());
  for (std::size_t id = 0; id < f.lattice().size(); ++id)
    if (f.class_of(id).members.size() == 1 && is_strongly_closed(f, id)) c.strongly_closed.push_back(id);
  return c;
}

/// Builds RV1, RV2 or RV3 over 7^{1+2}_+: Aut_F(S) is the full preimage of the
/// row's Out_F(S) in GL2(7), and SL(V) is adjoined on every rank-2 V. The
/// closure then gives Aut_F(V) = <SL(V), restrictions of Aut_F(S)>, whose type
/// (SL2(7):2 or GL2(7)) is forced by the stabiliser of V, and the V-classes are
/// the Out_F(S)-orbits on the eight lines of S/Z.
inline RVResult build_rv(const std::string& raw_name) {
  RVDescriptor d = rv_descriptor(raw_name);
  const long p = 7;
  const Extraspecial e = extraspecial_plus(p);
  const auto& g = *e.group;
  auto lat = std::make_shared<const SubgroupLattice>(e.group);
  FusionBuilder b(e.group, p, lat);
  const Subgroup z = center(Subgroup::whole(e.group));
  for (const auto& m : detail::rv_out_generators(d.name, p)) {
    GroupHom h = lift_to_extraspecial(e, m);
    b.add(lat->top(), std::move(h.images), false);
  }
  for (std::size_t id = 0; id < lat->size(); ++id) {
    const Subgroup& v = (*lat)[id];
    if (v.order() != static_cast<std::size_t>(p * p)) continue;
    Elem w = 0;
    for (Elem x : v.elements())
      if (x != FiniteGroup::identity() && !z.contains(x)) {
        w = x;
        break;
      }
    const Elem gens[] = {e.z, w};
    // transvections generate SL(V)
    const Elem t1[] = {e.z, g.mul(w, e.z)};
    const Elem t2[] = {g.mul(e.z, w), w};
    for (const auto* imgs : {t1, t2}) {
      auto h = extend_hom(e.group, gens, v, std::span<const Elem>(imgs, 2));
      if (!h || h->domain.order() != v.order()) throw Error("internal: transvection does not extend");
      b.add(id, std::move(h->images), false);
    }
  }
  FusionSystem f = b.finish(FusionSystem::Backend::generated, d.name);
  RVCertificate c = certify_rv(f, d.name);
  if (!c.saturated) throw Error("saturation certification failed for " + d.name);
  return RVResult{std::move(d), std::move(f), std::move(c)};
}

}  // namespace fusionkit
