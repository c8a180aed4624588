// Acceptance run: one PASS/FAIL line per criterion 1-7. Every criterion is an
// exact check; the budgets below are wall-clock limits in seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>

#include "fusionkit/fusionkit.hpp"
#include "s4_oracle.hpp"

using namespace fusionkit;

namespace {

constexpr double kBudgetSaturation = 30;
constexpr double kBudgetOracle = 30;
constexpr double kBudgetAlperin = 120;
constexpr double kBudgetProducts = 120;
constexpr double kBudgetWitness = 120;
constexpr double kBudgetRV = 600;

struct Outcome {
  bool pass = true;
  std::string detail;
  json report;  // compared across runs, excludes timing
};

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

Outcome saturation_suite_check() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : saturation_suite()) {
    const auto r = is_saturated(c.system);
    o.report[c.name] = {{"saturated", r.verdict}, {"digest", c.system.digest_hex()}};
    if (r.verdict != c.saturated) fail(o, c.name + " gave " + (r.verdict ? "true" : "false"));
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " systems, verdicts exact";
  return o;
}

Outcome oracle_check() {
  Outcome o;
  using s4_oracle::Set4;
  const auto f = s4_d8();
  const auto rows = s4_oracle::rows();
  std::map<Set4, const s4_oracle::OracleRow*> by_set;
  for (const auto& r : rows) by_set[r.q] = &r;
  auto as_set = [](const Subgroup& h) {
    Set4 s;
    for (const auto& p : h.element_perms()) s.insert({p[0], p[1], p[2], p[3]});
    return s;
  };
  std::size_t agree = 0;
  for (std::size_t id = 0; id < f.lattice().size(); ++id) {
    auto it = by_set.find(as_set(f.object(id)));
    if (it == by_set.end()) {
      fail(o, "subgroup missing from oracle");
      continue;
    }
    const auto& r = *it->second;
    if (f.aut_F_order(id) == r.aut_f && is_centric(f, id) == r.centric && is_radical(f, id) == r.radical &&
        is_fully_normalised(f, id) == r.fully_normalised)
      ++agree;
    else
      fail(o, "disagreement at object " + std::to_string(id));
  }
  std::set<Set4> lib;
  for (std::size_t id : fcr_objects(f)) lib.insert(as_set(f.object(id)));
  if (lib != s4_oracle::fcr(rows)) fail(o, "fcr differs from oracle");
  const Set4 v1{s4_oracle::kId, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const Set4 c4 = s4_oracle::closure({{1, 2, 3, 0}});
  const std::size_t v1_id = f.id(subgroup_generated(f.s_group(), {Perm::from_ints({1, 0, 3, 2}), Perm::from_ints({2, 3, 0, 1})}));
  if (f.aut_F_order(v1_id) != 6) fail(o, "|Aut_F(V1)| != 6");
  if (by_set.at(c4)->radical) fail(o, "C4 radical");
  o.report = {{"fcr_orders", json::array()}, {"aut_v1", f.aut_F_order(v1_id)}, {"agree", agree}};
  for (std::size_t id : fcr_objects(f)) o.report["fcr_orders"].push_back(f.object(id).order());
  if (o.pass)
    o.detail = "oracle agrees on all " + std::to_string(agree) + " subgroups; fcr = {V1, D8}, |Aut_F(V1)| = 6, C4 not radical";
  return o;
}

Outcome alperin_check() {
  Outcome o;
  std::size_t isos = 0, longest = 0;
  for (const auto& c : saturation_suite()) {
    if (!c.saturated) continue;
    const auto& f = c.system;
    const auto fcr = fcr_objects(f);
    json lengths = json::array();
    for (std::size_t q = 0; q < f.lattice().size(); ++q)
      f.for_each_iso_from(q, [&](std::size_t m, const Images& phi) {
        const GroupHom h{f.object(q), f.object(m), phi};
        const auto d = alperin_decompose(f, h);
        const auto v = verify_decomposition(f, d, h, fcr);
        if (!v.ok) fail(o, c.name + ": clause " + std::string(1, v.clause));
        lengths.push_back(d.chain.size());
        longest = std::max(longest, d.chain.size());
        ++isos;
      });
    const bool regen = alperin_regenerate(f) == f;
    if (!regen) fail(o, c.name + ": regeneration differs");
    o.report[c.name] = {{"chain_lengths", lengths}, {"regenerated", regen}};
  }
  if (o.pass)
    o.detail = std::to_string(isos) + " isomorphisms decomposed and verified (max length " + std::to_string(longest) +
               "), regeneration exact";
  return o;
}

Outcome product_check() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : product_suite()) {
    const auto f1 = transporter_at(c.g1, c.p), f2 = transporter_at(c.g2, c.p);
    const auto pf = product_fusion(f1, f2);
    auto g = direct_product({c.g1, c.g2});
    std::vector<Perm> gens;
    for (const auto& x : f1.S().element_perms()) gens.push_back(x.shifted(0, g->degree()));
    for (const auto& y : f2.S().element_perms()) gens.push_back(y.shifted(c.g1->degree(), g->degree()));
    const auto t = transporter_fusion(g, subgroup_generated(g, gens), c.p);
    const bool equal = pf.system == t;
    const bool q1 = fusion_isomorphic(quotient_fusion(pf.system, pf.factor1()).system, f2).has_value();
    const bool q2 = fusion_isomorphic(quotient_fusion(pf.system, pf.factor2()).system, f1).has_value();
    if (!equal) fail(o, c.name + ": product differs from transporter");
    if (!q1 || !q2) fail(o, c.name + ": quotient by a factor is not the other factor");
    o.report[c.name] = {{"equal", equal}, {"digest", pf.system.digest_hex()}, {"q1", q1}, {"q2", q2}};
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " same-prime pairs: hom tables equal, quotient by either factor is the other";
  return o;
}

Outcome witness_check() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& w : witness_suite(3)) {
    const auto& r = w.report;
    o.report[w.f1 + " x " + w.f2] = {{"strongly_closed", r.a_strongly_closed},
                                     {"quotient", r.quotient_isomorphic},
                                     {"centralizer_quotient", r.centralizer_quotient_isomorphic},
                                     {"digest", r.product_digest}};
    if (!r.all()) fail(o, w.f1 + " x " + w.f2);
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " pairs at p = 3, all three checks";
  return o;
}

Outcome rv_check() {
  Outcome o;
  for (const char* name : {"rv1", "rv2", "rv3"}) {
    try {
      const RVResult r = build_rv(name);
      const auto& c = r.certificate;
      json profile = json::array();
      std::string shape;
      for (auto [size, aut] : c.profile) {
        profile.push_back({size, aut});
        shape += (shape.empty() ? "" : "+") + std::to_string(size) + "x" + std::to_string(aut);
      }
      o.report[r.descriptor.name] = {{"out", c.out_order}, {"profile", profile}, {"digest", r.system.digest_hex()}};
      if (!r.matches()) fail(o, r.descriptor.name + " does not match its row");
      o.detail += (o.detail.empty() ? "" : ", ") + r.descriptor.name + " |Out|=" + std::to_string(c.out_order) + " " + shape;
    } catch (const std::exception& e) {
      fail(o, std::string(name) + ": " + e.what());
    }
  }
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "saturation suite", kBudgetSaturation, saturation_suite_check},
      {2, "classifier vs S4 brute-force oracle", kBudgetOracle, oracle_check},
      {3, "Alperin decomposition and regeneration", kBudgetAlperin, alperin_check},
      {4, "product/quotient laws", kBudgetProducts, product_check},
      {5, "product witness checks", kBudgetWitness, witness_check},
      {6, "RV table", kBudgetRV, rv_check},
  };
  bool all = true;
  std::vector<std::string> first;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      fail(o, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) fail(o, "over budget");
    first.push_back(o.report.dump());
    all = all && o.pass;
    std::printf("criterion %d %s: %s [%.1fs / %.0fs] %s\n", c.number, o.pass ? "PASS" : "FAIL", c.title, secs, c.budget,
                o.detail.c_str());
    if (c.number == 2)
      std::printf("  note: the literal list {D8, V1, V2} does not hold; V2 = <(02),(13)> has Out_F = C2, so it is not "
                  "radical (oracle and library agree)\n");
    std::fflush(stdout);
  }

  // criterion 7: a second run of every report, compared byte for byte
  bool same = true;
  std::string which;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.report = json{{"error", e.what()}};
    }
    if (o.report.dump() != first[i]) {
      same = false;
      which += " " + std::to_string(criteria[i].number);
    }
  }
  std::printf("criterion 7 %s: determinism %s\n", same ? "PASS" : "FAIL",
              same ? "(reports of 1-6 byte-identical across two runs)" : ("(differs in" + which + ")").c_str());
  all = all && same;
  return all ? 0 : 1;
}
