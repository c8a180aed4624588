#include <gtest/gtest.h>

#include "fusionkit/fusionkit.hpp"

#ifndef FUSIONKIT_SAMPLES
#define FUSIONKIT_SAMPLES "samples"
#endif

using namespace fusionkit;

namespace {

json sample(const std::string& name) { return parse_json_text(read_text_file(std::string(FUSIONKIT_SAMPLES) + "/" + name)); }

JobSpec job(std::string command, json fusion) {
  JobSpec s;
  s.command = std::move(command);
  s.fusions.push_back(std::move(fusion));
  return s;
}

}  // namespace

TEST(GroupSpec, Examples) {
  const auto d = parse_group_spec(R"({"type":"named","name":"extraspecial_plus","p":3})");
  EXPECT_EQ(make_named_group(d)->order(), 27u);
  const auto c2 = parse_group_spec(R"({"type":"permutation","degree":3,"generators":[[1,0,2]]})");
  EXPECT_EQ(make_named_group(c2)->order(), 2u);
  try {
    parse_group_spec(R"({"type":"named","name":"extraspecial_plus","p":2})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("odd prime"), std::string::npos);
  }
}

TEST(GroupSpec, Errors) {
  EXPECT_THROW(parse_group_spec("{not json"), Error);
  EXPECT_THROW(parse_group_spec(R"({"type":"permutation","degree":3,"generators":[[0,0,2]]})"), Error);
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"monster"})"), Error);
  EXPECT_THROW(parse_group_spec(R"({"type":"named","name":"cyclic"})"), Error);
  EXPECT_THROW(parse_group_spec(R"({"type":"mystery"})"), Error);
  EXPECT_THROW(parse_group_spec(R"({"type":"permutation","degree":3,"generators":[[1,0]]})"), Error);
}

TEST(GroupSpec, RoundTrip) {
  const char* texts[] = {
      R"({"type":"named","name":"extraspecial_plus","p":7})",
      R"({"type":"named","name":"abelian","invariants":[2,4]})",
      R"({"type":"permutation","degree":4,"generators":[[1,2,3,0],[2,1,0,3]]})",
      R"({"type":"direct_product","factors":[{"type":"named","name":"alternating","n":4},{"type":"named","name":"symmetric","n":3}]})",
      R"({"type":"semidirect","base":{"type":"named","name":"cyclic","n":3},"actor":{"type":"named","name":"cyclic","n":2},"action":[[[2,0,1]]]})",
  };
  for (const char* t : texts) {
    const GroupDescriptor d = parse_group_spec(t);
    const json j = group_spec_to_json(d);
    EXPECT_EQ(parse_group_spec(j), d) << t;
    EXPECT_EQ(group_spec_to_json(parse_group_spec(j.dump())), j) << t;
    EXPECT_EQ(j, parse_json_text(t)) << t;
  }
}

TEST(GroupSpec, SampleFiles) {
  EXPECT_EQ(make_named_group(parse_group_spec(sample("extraspecial_plus_3.json")))->order(), 27u);
  EXPECT_EQ(make_named_group(parse_group_spec(sample("c2_in_s3.json")))->order(), 2u);
  EXPECT_EQ(make_named_group(parse_group_spec(sample("s3_x_c2_semidirect.json")))->order(), 6u);
}

TEST(SubgroupSpec, ResolvesInsideTheGroup) {
  auto g = symmetric_group(4);
  const Subgroup v = parse_subgroup_spec(parse_json_text("[[1,0,3,2],[2,3,0,1]]"), g);
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(parse_subgroup_spec(subgroup_to_json(v), g).bits(), v.bits());
  EXPECT_THROW(parse_subgroup_spec(parse_json_text("[[1,0,2]]"), g), Error);
  EXPECT_THROW(parse_subgroup_spec(parse_json_text("[[1,0,2,3,4]]"), g), Error);
}

TEST(FusionSpec, BuildsEachKind) {
  EXPECT_TRUE(build_fusion(sample("s4_d8.json")) == s4_d8());
  EXPECT_EQ(build_fusion(sample("a4_v4.json")).S().order(), 4u);
  EXPECT_EQ(build_fusion(sample("a4xs3_p2.json")).S().order(), 8u);
  EXPECT_EQ(build_fusion(sample("a4xs3_p3.json")).S().order(), 9u);
  EXPECT_EQ(build_fusion(sample("extraspecial3_inverted.json")).S().order(), 27u);
  EXPECT_EQ(build_fusion(sample("v4_swap.json")).digest(), v4_swap().digest());
  EXPECT_EQ(build_fusion(sample("s3xc3_product.json")).S().order(), 9u);
  EXPECT_THROW(build_fusion(parse_json_text(R"({"type":"transporter","group":{"type":"named","name":"symmetric","n":4},"p":6})")),
               Error);
}

TEST(Jobs, ExitCodes) {
  EXPECT_EQ(run_job(job("saturation", sample("s4_d8.json"))).exit_code, 0);
  EXPECT_EQ(run_job(job("saturation", sample("v4_swap.json"))).exit_code, 1);
  auto bad = job("decompose", sample("s4_d8.json"));
  bad.map = sample("s4_d8_bad_phi.json");
  const Report r = run_job(bad);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.body["error"], "not an F-isomorphism");
  EXPECT_EQ(run_job(job("nonsense", sample("s4_d8.json"))).exit_code, 2);
  JobSpec none;
  none.command = "classify";
  EXPECT_EQ(run_job(none).exit_code, 2);
}

TEST(Jobs, GroupAndSylow) {
  JobSpec s;
  s.command = "fcr";
  s.group = parse_json_text(R"({"type":"named","name":"symmetric","n":4})");
  s.sylow = 2;
  const Report r = run_job(s);
  ASSERT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.body["fcr"].size(), 2u);
  EXPECT_EQ(r.body["fcr"][0]["aut_F_order"], 6);
}

TEST(Jobs, EveryCommandRunsAndIsDeterministic) {
  std::vector<JobSpec> jobs;
  jobs.push_back(job("build", sample("s4_d8.json")));
  jobs.push_back(job("saturation", sample("extraspecial3_inverted.json")));
  jobs.push_back(job("classify", sample("s4_d8.json")));
  jobs.push_back(job("fcr", sample("a4xs3_p2.json")));
  auto d = job("decompose", sample("s4_d8.json"));
  d.map = sample("s4_d8_phi.json");
  jobs.push_back(d);
  auto p = job("product", sample("s3_c3.json"));
  p.fusions.push_back(sample("a4xs3_p3.json"));
  jobs.push_back(p);
  auto q = job("quotient", sample("s4_d8.json"));
  q.kernel = parse_json_text("[[1,0,3,2],[2,3,0,1]]");
  jobs.push_back(q);
  for (const char* k : {"full", "trivial"}) {
    auto n = job("normalizer", sample("s4_d8.json"));
    n.at = parse_json_text("[[2,3,0,1]]");
    n.k = k;
    jobs.push_back(n);
  }
  JobSpec w;
  w.command = "witness";
  w.p = 3;
  jobs.push_back(w);
  for (const auto& j : jobs) {
    const Report a = run_job(j), b = run_job(j);
    EXPECT_EQ(a.exit_code, 0) << j.command << ": " << a.dump();
    EXPECT_TRUE(a.body["verdict"].get<bool>()) << j.command;
    EXPECT_EQ(report_without_timing(a.body), report_without_timing(b.body)) << j.command;
    EXPECT_TRUE(a.body.contains("timing_seconds"));
  }
}

TEST(Jobs, NormalizerWithExplicitK) {
  auto n = job("normalizer", sample("s4_d8.json"));
  n.at = parse_json_text("[[1,0,3,2],[2,3,0,1]]");
  // identity and the swap fixing (02)(13): closed under composition
  n.k = R"([{"domain_gens":[[1,0,3,2],[2,3,0,1]],"images":[[1,0,3,2],[2,3,0,1]]},
            {"domain_gens":[[1,0,3,2],[2,3,0,1]],"images":[[3,2,1,0],[2,3,0,1]]}])";
  const Report r = run_job(n);
  EXPECT_EQ(r.exit_code, 0) << r.dump();
  EXPECT_EQ(r.body["normalizer"]["s_order"], 8);
  n.k = R"([{"domain_gens":[[1,0,3,2],[2,3,0,1]],"images":[[2,3,0,1],[3,2,1,0]]}])";
  EXPECT_EQ(run_job(n).exit_code, 2);
}
