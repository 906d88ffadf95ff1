#include "magicstar/io.hpp"

#include <ostream>

#include "json.hpp"

namespace magicstar {

using nlohmann::json;

void write_roots_json(std::ostream& os, const RootSystem& rs) {
  json j;
  j["family"] = family_name(rs.spec.family);
  j["n"] = rs.spec.n;
  j["N"] = rs.spec.N;
  j["R"] = rs.spec.R;
  json arr = json::array();
  for (const auto& r : rs.roots) {
    json e;
    e["index"] = r.index;
    e["kind"] = r.kind == RootKind::Orthogonal ? "orthogonal" : "spinor";
    std::vector<int> c(r.coords2.begin(), r.coords2.begin() + rs.spec.N);
    e["coords2"] = c;
    arr.push_back(std::move(e));
  }
  j["roots"] = std::move(arr);
  os << j.dump(2) << "\n";
}

void write_structure_csv(std::ostream& os, const Algebra& alg) {
  os << "a_index,b_index,term_kind,term_index,numerator,denominator\n";
  const int D = alg.dim();
  Terms buf;
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      buf.clear();
      alg.bracket_basis(a, b, buf);
      for (const auto& [t, c] : buf) {
        bool cart = alg.is_cartan(t);
        os << a << "," << b << "," << (cart ? "cartan" : "gen") << ","
           << (cart ? t : alg.root_of(t)) << "," << c.num() << "," << c.den()
           << "\n";
      }
    }
}

void write_star_csv(std::ostream& os, const RootSystem& rs) {
  os << "root_index,r,s\n";
  for (const auto& r : rs.roots)
    os << r.index << "," << int(r.r) << "," << int(r.s) << "\n";
}

void write_report_json(std::ostream& os, const SuiteConfig& cfg,
                       const std::vector<SuiteReport>& reports) {
  json j;
  j["family"] = family_name(cfg.family);
  j["n"] = cfg.n;
  j["vertex"] = {cfg.vertex.r, cfg.vertex.s};
  j["seed"] = cfg.seed;
  j["sample"] = cfg.sample_budget;
  json arr = json::array();
  for (const auto& r : reports) {
    json e;
    e["id"] = r.id;
    e["mode"] = r.mode;
    e["checked"] = r.checked;
    e["failed"] = r.failed;
    e["witnesses"] = r.witnesses;
    e["notes"] = r.notes;
    e["elapsed_ms"] = r.elapsed_ms;
    e["passed"] = r.passed;
    arr.push_back(std::move(e));
  }
  j["suites"] = std::move(arr);
  os << j.dump(2) << "\n";
}

}  // namespace magicstar
