#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "magicstar/io.hpp"

namespace {

using namespace magicstar;

struct CommonOpts {
  std::string family = "e8";
  int n = 1;
  std::string vertex = "1,1";
  std::string out;
  std::string format = "json";
};

Charge parse_vertex(const std::string& s) {
  std::istringstream is(s);
  int r, sv;
  char comma;
  if (!(is >> r >> comma >> sv) || comma != ',')
    throw std::runtime_error("--vertex expects R,S");
  return Charge{r, sv};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

// Writes to the path when given, else to stdout.
template <class Fn>
void emit(const std::string& path, Fn fn) {
  if (path.empty()) {
    fn(std::cout);
  } else {
    auto f = open_out(path);
    fn(f);
  }
}

int cmd_build(const CommonOpts& o) {
  Algebra alg(make_spec(family_from_name(o.family), o.n));
  if (o.out.empty()) {
    if (o.format == "csv") write_structure_csv(std::cout, alg);
    else write_roots_json(std::cout, alg.rs());
    return 0;
  }
  {
    auto f = open_out(o.out + ".roots.json");
    write_roots_json(f, alg.rs());
  }
  {
    auto f = open_out(o.out + ".structure.csv");
    write_structure_csv(f, alg);
  }
  std::cerr << "wrote " << o.out << ".roots.json (" << alg.rs().size()
            << " roots) and " << o.out << ".structure.csv\n";
  return 0;
}

int cmd_star(const CommonOpts& o) {
  RootSystem rs = enumerate_roots(make_spec(family_from_name(o.family), o.n));
  emit(o.out, [&](std::ostream& os) { write_star_csv(os, rs); });
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suites, long long sample,
               std::uint64_t seed) {
  SuiteConfig cfg;
  cfg.family = family_from_name(o.family);
  cfg.n = o.n;
  cfg.vertex = parse_vertex(o.vertex);
  cfg.sample_budget = sample;
  cfg.seed = seed;

  std::vector<std::string> ids;
  std::stringstream ss(suites);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    if (!is_suite_id(id)) throw std::runtime_error("unknown suite ID: " + id);
    ids.push_back(id);
  }
  if (ids.empty()) throw std::runtime_error("no suite IDs given");

  std::vector<SuiteReport> reports;
  bool all_pass = true;
  for (const auto& sid : ids) {
    reports.push_back(run_suite(sid, cfg));
    const auto& r = reports.back();
    all_pass = all_pass && r.passed;
    std::cerr << r.id << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.mode
              << ", checked=" << r.checked << ", failed=" << r.failed << ", "
              << r.elapsed_ms << " ms)\n";
  }
  emit(o.out, [&](std::ostream& os) { write_report_json(os, cfg, reports); });
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Magic Star algebra toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string suites;
  long long sample = 1000000;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--family", o.family, "algebra family")
        ->check(CLI::IsMember({"e6", "e7", "e8"}));
    c->add_option("--n", o.n, "level n >= 1");
    c->add_option("--out", o.out, "output path (stdout when omitted)");
  };

  CLI::App* build = app.add_subcommand("build", "export roots and structure constants");
  add_common(build);
  build->add_option("--format", o.format, "stdout format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "run named verification suites");
  add_common(verify);
  verify->add_option("--suite", suites, "comma-separated suite IDs")->required();
  verify->add_option("--vertex", o.vertex, "tip charge R,S for HT suites");
  verify->add_option("--sample", sample, "sampling budget for sampled suites");
  verify->add_option("--seed", seed, "RNG seed (default 0)");

  CLI::App* star = app.add_subcommand("star", "export (root index, r, s) CSV");
  add_common(star);
  star->add_option("--format", o.format, "output format (csv only)")
      ->check(CLI::IsMember({"csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(o);
    if (star->parsed()) return cmd_star(o);
    return cmd_verify(o, suites, sample, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
