// fusionkit: command-line front end. Every command prints a JSON report.
// Exit status: 0 when the verdict holds, 1 when it fails, 2 on error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fusionkit/fusionkit.hpp"

namespace {

using fusionkit::json;

struct Options {
  std::string group_file;
  long sylow = 0;
  std::vector<std::string> fusion_files;
  std::string out;
  std::string kernel, at, k = "full", map, name;
  long p = 3;
};

fusionkit::JobSpec to_job(const std::string& command, const Options& o) {
  fusionkit::JobSpec s;
  s.command = command;
  if (!o.group_file.empty()) s.group = fusionkit::json_argument(o.group_file);
  if (o.sylow) s.sylow = o.sylow;
  for (const auto& f : o.fusion_files) s.fusions.push_back(fusionkit::json_argument(f));
  if (!o.kernel.empty()) s.kernel = fusionkit::json_argument(o.kernel);
  if (!o.at.empty()) s.at = fusionkit::json_argument(o.at);
  if (!o.map.empty()) s.map = fusionkit::json_argument(o.map);
  s.k = o.k;
  s.name = o.name;
  s.p = o.p;
  return s;
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group_file, "group descriptor (file or inline JSON)");
  sub->add_option("--sylow", o.sylow, "prime p; the system is F_S(G) for S a Sylow p-subgroup");
  sub->add_option("--fusion", o.fusion_files, "fusion spec (file or inline JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: fusion systems over finite p-groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "write the report here instead of stdout");

  const char* plain[][2] = {{"build", "close and summarise a fusion system"},
                            {"saturation", "decide saturation"},
                            {"classify", "per-subgroup classifier rows"},
                            {"fcr", "fully normalised centric radical subgroups"}};
  for (const auto& [n, d] : plain) add_source(app.add_subcommand(n, d), o);

  auto* dec = app.add_subcommand("decompose", "Alperin decomposition of an F-morphism");
  add_source(dec, o);
  dec->add_option("--map", o.map, "{\"domain_gens\": [...], \"images\": [...]}")->required();

  auto* prod = app.add_subcommand("product", "product of two systems (pass --fusion twice)");
  add_source(prod, o);

  auto* quo = app.add_subcommand("quotient", "quotient by a strongly closed subgroup");
  add_source(quo, o);
  quo->add_option("--kernel", o.kernel, "subgroup spec (generator list)")->required();

  auto* nor = app.add_subcommand("normalizer", "N_F^K(Q)");
  add_source(nor, o);
  nor->add_option("--at", o.at, "subgroup spec for Q")->required();
  nor->add_option("--k", o.k, "full, trivial, or a JSON list of maps on Q");

  auto* rv = app.add_subcommand("rv", "build and certify RV1, RV2 or RV3");
  rv->add_option("--name", o.name, "rv1, rv2 or rv3")->required();

  auto* wit = app.add_subcommand("witness", "structural checks for F1 x F2 over p^{1+2} x A");
  wit->add_option("--p", o.p, "odd prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  fusionkit::Report r;
  try {
    r = fusionkit::run_job(to_job(command, o));
  } catch (const std::exception& e) {
    r.body = json{{"command", command}, {"error", e.what()}};
    r.exit_code = 2;
  }
  if (o.out.empty()) {
    std::cout << r.dump();
  } else {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    out << r.dump();
  }
  if (r.body.contains("error")) std::cerr << "error: " << r.body["error"].get<std::string>() << "\n";
  return r.exit_code;
}
