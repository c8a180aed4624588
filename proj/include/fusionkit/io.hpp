#pragma once

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fusionkit/alperin.hpp"
#include "fusionkit/rv.hpp"

namespace fusionkit {

using json = nlohmann::json;

// ---------------------------------------------------------------- parsing

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// A CLI argument that is either a JSON literal or the path of a JSON file.
inline json json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return parse_json_text(arg);
  return parse_json_text(read_text_file(arg));
}

inline Perm perm_from_json(const json& j) {
  if (!j.is_array()) throw Error("permutation must be an array of images");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("permutation entries must be integers");
    v.push_back(x.get<int>());
  }
  return Perm::from_ints(v);
}

inline json perm_to_json(const Perm& p) { return json(p.images()); }

namespace detail {

inline const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

inline long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string("'") + what + "' must be an integer");
  return j.get<long>();
}

inline std::vector<Perm> perm_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("'") + what + "' must be a list of permutations");
  std::vector<Perm> out;
  for (const auto& x : j) out.push_back(perm_from_json(x));
  return out;
}

inline GroupDescriptor parse_descriptor(const json& j) {
  if (!j.is_object()) throw Error("group descriptor must be a JSON object");
  const std::string type = field(j, "type").get<std::string>();
  GroupDescriptor d;
  if (type == "permutation") {
    d.kind = GroupDescriptor::Kind::permutation;
    const long deg = integer(field(j, "degree"), "degree");
    if (deg < 1) throw Error("degree must be positive");
    d.degree = static_cast<std::size_t>(deg);
    d.generators = perm_list(field(j, "generators"), "generators");
    for (const auto& g : d.generators)
      if (g.degree() != d.degree) throw Error("generator degree mismatch");
  } else if (type == "named") {
    d.kind = GroupDescriptor::Kind::named;
    d.name = field(j, "name").get<std::string>();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "type" || it.key() == "name") continue;
      if (it.key() == "invariants") {
        for (const auto& x : it.value()) d.invariants.push_back(integer(x, "invariants"));
        continue;
      }
      d.params[it.key()] = integer(it.value(), it.key().c_str());
    }
  } else if (type == "direct_product") {
    d.kind = GroupDescriptor::Kind::direct_product;
    const json& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty()) throw Error("'factors' must be a non-empty list");
    for (const auto& f : fs) d.factors.push_back(parse_descriptor(f));
  } else if (type == "semidirect") {
    d.kind = GroupDescriptor::Kind::semidirect;
    d.factors.push_back(parse_descriptor(field(j, "base")));
    d.factors.push_back(parse_descriptor(field(j, "actor")));
    const json& a = field(j, "action");
    if (!a.is_array()) throw Error("'action' must be a list");
    for (const auto& row : a) d.action.push_back(perm_list(row, "action"));
  } else {
    throw Error("unknown group descriptor type '" + type + "'");
  }
  return d;
}

}  // namespace detail

/// Parses and validates a group descriptor. Named constructors are checked by
/// building the group, which also enforces the order cap.
inline GroupDescriptor parse_group_spec(const json& j) {
  GroupDescriptor d = detail::parse_descriptor(j);
  make_named_group(d);
  return d;
}

inline GroupDescriptor parse_group_spec(std::string_view text) { return parse_group_spec(parse_json_text(text)); }
inline GroupDescriptor parse_group_spec(const std::string& text) { return parse_group_spec(std::string_view(text)); }
inline GroupDescriptor parse_group_spec(const char* text) { return parse_group_spec(std::string_view(text)); }

inline json group_spec_to_json(const GroupDescriptor& d) {
  json j;
  switch (d.kind) {
    case GroupDescriptor::Kind::permutation: {
      j["type"] = "permutation";
      j["degree"] = d.degree;
      j["generators"] = json::array();
      for (const auto& g : d.generators) j["generators"].push_back(perm_to_json(g));
      break;
    }
    case GroupDescriptor::Kind::named:
      j["type"] = "named";
      j["name"] = d.name;
      for (const auto& [k, v] : d.params) j[k] = v;
      if (!d.invariants.empty()) j["invariants"] = d.invariants;
      break;
    case GroupDescriptor::Kind::direct_product:
      j["type"] = "direct_product";
      j["factors"] = json::array();
      for (const auto& f : d.factors) j["factors"].push_back(group_spec_to_json(f));
      break;
    case GroupDescriptor::Kind::semidirect: {
      j["type"] = "semidirect";
      j["base"] = group_spec_to_json(d.factors.at(0));
      j["actor"] = group_spec_to_json(d.factors.at(1));
      j["action"] = json::array();
      for (const auto& row : d.action) {
        json r = json::array();
        for (const auto& p : row) r.push_back(perm_to_json(p));
        j["action"].push_back(r);
      }
      break;
    }
  }
  return j;
}

/// An element given as a permutation, or as an index into g's canonical order.
inline Elem parse_element(const json& j, const GroupPtr& g) {
  if (j.is_number_integer()) {
    const long i = j.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= g->order()) throw Error("element index out of range");
    return static_cast<Elem>(i);
  }
  const Perm p = perm_from_json(j);
  if (p.degree() != g->degree()) throw Error("element degree mismatch");
  auto e = g->find(p);
  if (!e) throw Error("permutation " + p.to_string() + " is not an element of the group");
  return *e;
}

/// A subgroup given by a list of generators, or {"generators": [...]}.
inline Subgroup parse_subgroup_spec(const json& j, const GroupPtr& g) {
  const json& gens = j.is_object() ? detail::field(j, "generators") : j;
  if (!gens.is_array()) throw Error("subgroup spec must be a list of generators");
  std::vector<Elem> idx;
  for (const auto& x : gens) idx.push_back(parse_element(x, g));
  return subgroup_generated(g, std::span<const Elem>(idx));
}

inline json subgroup_to_json(const Subgroup& h) {
  json gens = json::array();
  for (Elem e : small_generating_set(h)) gens.push_back(perm_to_json(h.ambient().element(e)));
  return json{{"order", h.order()}, {"generators", gens}};
}

/// {"domain_gens": [...], "images": [...]}, both resolved inside S.
inline GroupHom parse_map_spec(const json& j, const GroupPtr& s) {
  const json& dg = detail::field(j, "domain_gens");
  const json& im = detail::field(j, "images");
  if (!dg.is_array() || !im.is_array() || dg.size() != im.size())
    throw Error("'domain_gens' and 'images' must be lists of equal length");
  std::vector<Elem> gens, imgs;
  for (const auto& x : dg) gens.push_back(parse_element(x, s));
  for (const auto& x : im) imgs.push_back(parse_element(x, s));
  auto h = extend_hom(s, gens, Subgroup::whole(s), imgs);
  if (!h) throw Error("generator images do not define a homomorphism");
  return *h;
}

inline json map_to_json(const FusionSystem& f, std::size_t q, const Images& psi) {
  const Subgroup& qs = f.object(q);
  const auto& g = *f.s_group();
  json dg = json::array(), im = json::array();
  for (Elem e : small_generating_set(qs)) {
    dg.push_back(perm_to_json(g.element(e)));
    im.push_back(perm_to_json(g.element(psi[qs.position(e)])));
  }
  return json{{"domain_gens", dg}, {"images", im}};
}

// ---------------------------------------------------------------- fusion specs

/// Fusion specs:
///   {"type":"transporter","group":G,"p":p[,"sylow":subgroup]}
///   {"type":"inner","group":S,"p":p}
///   {"type":"generated","group":G,"p":p[,"S":subgroup],"generators":[map, ...]}
///   {"type":"product","factors":[F1, F2]}
///   {"type":"rv","name":"rv1"|"rv2"|"rv3"}
inline FusionSystem build_fusion(const json& j) {
  if (!j.is_object()) throw Error("fusion spec must be a JSON object");
  const std::string type = detail::field(j, "type").get<std::string>();
  if (type == "product") {
    const json& fs = detail::field(j, "factors");
    if (!fs.is_array() || fs.size() != 2) throw Error("product needs exactly two factors");
    return product_fusion(build_fusion(fs[0]), build_fusion(fs[1])).system;
  }
  if (type == "rv") return build_rv(detail::field(j, "name").get<std::string>()).system;
  const GroupPtr g = make_named_group(parse_group_spec(detail::field(j, "group")));
  const long p = detail::integer(detail::field(j, "p"), "p");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error("p must be prime");
  const auto up = static_cast<std::uint64_t>(p);
  const Subgroup whole = Subgroup::whole(g);
  if (type == "transporter") {
    const Subgroup s = j.contains("sylow") ? parse_subgroup_spec(j["sylow"], g) : sylow_p(whole, up);
    return transporter_fusion(whole, s, up);
  }
  const Subgroup s = j.contains("S") ? parse_subgroup_spec(j["S"], g) : whole;
  if (type == "inner") return inner_fusion(s, up);
  if (type == "generated") {
    check_prime_for(s, up);
    const GroupPtr sl = detail::local_copy(s);
    std::vector<GroupHom> gens;
    if (j.contains("generators"))
      for (const auto& m : j["generators"]) {
        GroupHom h = parse_map_spec(m, sl);
        if (!h.is_injective()) throw Error("fusion generator is not injective");
        gens.push_back(std::move(h));
      }
    return generated_fusion(Subgroup::whole(sl), up, gens, j.value("description", "generated"));
  }
  throw Error("unknown fusion spec type '" + type + "'");
}

// ---------------------------------------------------------------- reports

inline json object_json(const FusionSystem& f, std::size_t id) {
  json o = subgroup_to_json(f.object(id));
  o["id"] = id;
  return o;
}

inline json system_summary(const FusionSystem& f) {
  return json{{"backend", backend_name(f.backend())},
              {"description", f.description()},
              {"prime", f.prime()},
              {"s_order", f.S().order()},
              {"s_generators", subgroup_to_json(f.S())["generators"]},
              {"subgroups", f.lattice().size()},
              {"classes", f.classes().size()},
              {"morphisms", f.morphism_count()},
              {"digest", f.digest_hex()}};
}

inline json saturation_json(const FusionSystem& f, const SaturationReport& r) {
  json rows = json::array();
  for (const auto& c : r.per_class)
    rows.push_back({{"class_rep", c.class_rep},
                    {"chosen", c.chosen},
                    {"fully_automised", c.fully_automised},
                    {"receptive", c.receptive}});
  json j{{"saturated", r.verdict}, {"per_class", rows}};
  j["counterexample"] = r.counterexample ? object_json(f, *r.counterexample) : json(nullptr);
  return j;
}

inline json classify_json(const FusionSystem& f) {
  json rows = json::array();
  for (const auto& r : classify(f)) {
    json o = object_json(f, r.id);
    o["object"] = r.id;
    o["fully_automised"] = r.fully_automised;
    o["receptive"] = r.receptive;
    o["centric"] = r.centric;
    o["radical"] = r.radical;
    o["fully_normalised"] = r.fully_normalised;
    o["fully_centralised"] = r.fully_centralised;
    o["strongly_closed"] = r.strongly_closed;
    rows.push_back(std::move(o));
  }
  return rows;
}

inline json fcr_json(const FusionSystem& f) {
  json rows = json::array();
  for (std::size_t id : fcr_objects(f)) {
    json o = object_json(f, id);
    o["aut_F_order"] = f.aut_F_order(id);
    o["out_F_order"] = out_F(f, id).out.group->order();
    rows.push_back(std::move(o));
  }
  return rows;
}

inline json decomposition_json(const FusionSystem& f, const AlperinDecomposition& d) {
  json chain = json::array();
  for (const auto& s : d.chain)
    chain.push_back({{"from", object_json(f, s.from)},
                     {"to", object_json(f, s.to)},
                     {"q", object_json(f, s.q)},
                     {"psi", map_to_json(f, s.q, s.psi)}});
  return json{{"source", object_json(f, d.source)}, {"target", object_json(f, d.target)}, {"length", d.chain.size()},
              {"chain", chain}};
}

inline json rv_json(const RVResult& r) {
  const auto& c = r.certificate;
  json profile = json::array();
  for (auto [n, a] : c.profile) profile.push_back({{"class_size", n}, {"aut_F_order", a}});
  json cr = json::array();
  for (std::size_t id : c.rank2_cr) cr.push_back(object_json(r.system, id));
  json sc = json::array();
  for (std::size_t id : c.strongly_closed) sc.push_back(r.system.object(id).order());
  return json{{"name", r.descriptor.name},
              {"out_type", r.descriptor.out_type},
              {"out_order", c.out_order},
              {"out_type_matches", c.out_type_matches},
              {"saturated", c.saturated},
              {"s_centric_radical", c.s_centric_radical},
              {"rank2_centric_radical", cr},
              {"rank2_count", c.rank2_cr.size()},
              {"profile", profile},
              {"strongly_closed_orders", sc},
              {"matches_table", r.matches()}};
}

// ---------------------------------------------------------------- jobs

/// Pairs (F1, F2) for the product witness checks at an odd prime p:
/// F1 in {F_P(P), F_P(P:2)}, F2 in {F_{Cp}(Cp), F_{Cp}(D_2p)}.
struct WitnessCase {
  std::string f1;
  std::string f2;
  WitnessReport report;
};

inline std::vector<WitnessCase> witness_suite(long p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw Error("witness requires an odd prime");
  const auto up = static_cast<std::uint64_t>(p);
  const Extraspecial e = extraspecial_plus(p);
  const GroupPtr inv = extraspecial_inverted(p);
  const GroupPtr cp = cyclic_group(p);
  const GroupPtr dp = dihedral_group(2 * p);
  const std::pair<std::string, FusionSystem> f1s[] = {
      {"F_P(P)", inner_fusion(Subgroup::whole(e.group), up)},
      {"F_P(P:2)", transporter_fusion(inv, sylow_p(Subgroup::whole(inv), up), up)}};
  const std::pair<std::string, FusionSystem> f2s[] = {
      {"F_Cp(Cp)", inner_fusion(Subgroup::whole(cp), up)},
      {"F_Cp(D2p)", transporter_fusion(dp, sylow_p(Subgroup::whole(dp), up), up)}};
  std::vector<WitnessCase> out;
  for (const auto& [n1, f1] : f1s)
    for (const auto& [n2, f2] : f2s) out.push_back({n1, n2, product_witness(f1, f2)});
  return out;
}

struct JobSpec {
  std::string command;  // build|saturation|classify|fcr|decompose|product|quotient|normalizer|rv|witness
  std::optional<json> group;
  std::optional<long> sylow;  // the prime, with `group`
  std::vector<json> fusions;
  std::optional<json> kernel;  // quotient
  std::optional<json> at;      // normalizer
  std::string k = "full";      // normalizer: full | trivial | JSON list of automorphisms
  std::optional<json> map;     // decompose
  std::string name;            // rv
  long p = 3;                  // witness
};

struct Report {
  json body;
  int exit_code = 0;

  std::string dump() const { return body.dump(2) + "\n"; }
};

/// The report with timing removed, for determinism checks.
inline std::string report_without_timing(const json& j) {
  json c = j;
  c.erase("timing_seconds");
  return c.dump();
}

namespace detail {

inline FusionSystem job_fusion(const JobSpec& s, std::size_t index = 0) {
  if (index < s.fusions.size()) return build_fusion(s.fusions[index]);
  if (index == 0 && s.group) {
    if (!s.sylow) throw Error("--group requires --sylow <prime>");
    json j{{"type", "transporter"}, {"group", *s.group}, {"p", *s.sylow}};
    return build_fusion(j);
  }
  throw Error("command '" + s.command + "' needs a fusion system (--fusion FILE, or --group FILE --sylow P)");
}

inline std::vector<Images> k_maps(const FusionSystem& f, std::size_t q, const std::string& k) {
  if (k == "full") {
    std::vector<Images> out;
    for (const auto& a : automorphisms(f.object(q))) out.push_back(a.images);
    return out;
  }
  if (k == "trivial") return {f.object(q).elements()};
  const json list = json_argument(k);
  if (!list.is_array()) throw Error("--k must be full, trivial or a list of maps");
  std::vector<Images> out;
  const Subgroup& qs = f.object(q);
  for (const auto& m : list) {
    GroupHom h = parse_map_spec(m, f.s_group());
    if (h.domain.bits() != qs.bits() || !h.is_injective() || h.image().bits() != qs.bits())
      throw Error("K must consist of automorphisms of Q");
    out.push_back(h.images);
  }
  return out;
}

}  // namespace detail

inline Report run_job(const JobSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  json& b = r.body;
  b["command"] = spec.command;
  bool verdict = true;
  try {
    const std::string& c = spec.command;
    if (c == "build") {
      const FusionSystem f = detail::job_fusion(spec);
      b["system"] = system_summary(f);
      json cls = json::array();
      for (const auto& k : f.classes()) {
        json members = json::array();
        for (std::size_t m : k.members) members.push_back(m);
        cls.push_back({{"rep", object_json(f, k.rep)}, {"members", members}, {"aut_F_order", k.autos.size()}});
      }
      b["classes"] = cls;
    } else if (c == "saturation") {
      const FusionSystem f = detail::job_fusion(spec);
      const SaturationReport s = is_saturated(f);
      b["system"] = system_summary(f);
      b["saturation"] = saturation_json(f, s);
      verdict = s.verdict;
    } else if (c == "classify") {
      const FusionSystem f = detail::job_fusion(spec);
      b["system"] = system_summary(f);
      b["objects"] = classify_json(f);
    } else if (c == "fcr") {
      const FusionSystem f = detail::job_fusion(spec);
      b["system"] = system_summary(f);
      b["fcr"] = fcr_json(f);
    } else if (c == "decompose") {
      if (!spec.map) throw Error("decompose needs --map");
      const FusionSystem f = detail::job_fusion(spec);
      const GroupHom phi = parse_map_spec(*spec.map, f.s_group());
      const AlperinDecomposition d = alperin_decompose_morphism(f, phi);
      const GroupHom l = f.localize(phi);
      const VerifyResult v = verify_decomposition(f, d, GroupHom{l.domain, l.image(), l.images});
      b["system"] = system_summary(f);
      b["decomposition"] = decomposition_json(f, d);
      b["verified"] = v.ok;
      if (!v.ok) b["failed_clause"] = std::string(1, v.clause);
      verdict = v.ok;
    } else if (c == "product") {
      const FusionSystem f1 = detail::job_fusion(spec, 0);
      const FusionSystem f2 = detail::job_fusion(spec, 1);
      const ProductFusion pf = product_fusion(f1, f2);
      b["factors"] = {system_summary(f1), system_summary(f2)};
      b["system"] = system_summary(pf.system);
      b["factor_objects"] = {object_json(pf.system, pf.factor1()), object_json(pf.system, pf.factor2())};
      const bool sat = is_saturated(pf.system).verdict;
      b["saturated"] = sat;
      verdict = sat;
    } else if (c == "quotient") {
      if (!spec.kernel) throw Error("quotient needs --kernel");
      const FusionSystem f = detail::job_fusion(spec);
      const std::size_t t = f.id(parse_subgroup_spec(*spec.kernel, f.s_group()));
      const QuotientFusion q = quotient_fusion(f, t);
      b["system"] = system_summary(f);
      b["kernel"] = object_json(f, t);
      b["quotient"] = system_summary(q.system);
      b["quotient_saturated"] = is_saturated(q.system).verdict;
    } else if (c == "normalizer") {
      if (!spec.at) throw Error("normalizer needs --at");
      const FusionSystem f = detail::job_fusion(spec);
      const std::size_t q = f.id(parse_subgroup_spec(*spec.at, f.s_group()));
      const FusionSystem n = normalizer_subsystem(f, q, detail::k_maps(f, q, spec.k));
      b["system"] = system_summary(f);
      b["at"] = object_json(f, q);
      b["k"] = spec.k;
      b["normalizer"] = system_summary(n);
    } else if (c == "rv") {
      const RVResult res = build_rv(spec.name);
      b["system"] = system_summary(res.system);
      b["rv"] = rv_json(res);
      verdict = res.matches();
    } else if (c == "witness") {
      json cases = json::array();
      for (const auto& w : witness_suite(spec.p)) {
        cases.push_back({{"f1", w.f1},
                         {"f2", w.f2},
                         {"a_strongly_closed", w.report.a_strongly_closed},
                         {"quotient_isomorphic", w.report.quotient_isomorphic},
                         {"centralizer_quotient_isomorphic", w.report.centralizer_quotient_isomorphic},
                         {"product_order", w.report.product_order},
                         {"product_classes", w.report.product_classes},
                         {"product_digest", w.report.product_digest}});
        verdict = verdict && w.report.all();
      }
      b["p"] = spec.p;
      b["cases"] = cases;
    } else {
      throw Error("unknown command '" + c + "'");
    }
    b["verdict"] = verdict;
    r.exit_code = verdict ? 0 : 1;
  } catch (const std::exception& e) {
    b["error"] = e.what();
    r.exit_code = 2;
  }
  b["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace fusionkit
