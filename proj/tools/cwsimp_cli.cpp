#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cwsimp/approximation.hpp"
#include "cwsimp/contraction.hpp"
#include "cwsimp/cw.hpp"
#include "cwsimp/error.hpp"
#include "cwsimp/homology.hpp"
#include "cwsimp/io.hpp"
#include "cwsimp/pipeline.hpp"
#include "cwsimp/sphere.hpp"
#include "cwsimp/subdivision.hpp"

using namespace cwsimp;
using nlohmann::json;

namespace {

struct BuildOptions {
  std::vector<std::string> space;
  std::string method = "del-edge";
  std::string strategy = "generalized";
  int pre_subdiv = 0;
  int max_rounds = 12;
  int star_samples = 8;
  bool contract = true;
  bool simplify = true;
  std::uint64_t seed = 0;
  std::string out;
  std::string checkpoint;
  double eps = 1e-10;
};

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidInput, "expected an integer for " + what + ", got '" + s + "'");
}

// Space: sphere d | rp n | lens p q | grassmannian24. Returns the complex and a file stem.
std::pair<CWComplex, std::string> parse_space(const std::vector<std::string>& a) {
  if (a.empty()) fail(ErrorKind::InvalidInput, "missing space");
  const std::string& kind = a[0];
  auto need = [&](std::size_t n) {
    if (a.size() != n + 1) fail(ErrorKind::InvalidInput, kind + " takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "sphere") {
    need(1);
    const int d = to_int(a[1], "sphere dimension");
    if (d < 1) fail(ErrorKind::InvalidInput, "sphere dimension must be positive");
    return {cw_sphere(d), "sphere" + a[1]};
  }
  if (kind == "rp") {
    need(1);
    const int n = to_int(a[1], "projective dimension");
    if (n < 1) fail(ErrorKind::InvalidInput, "projective dimension must be positive");
    return {cw_projective(n), "rp" + a[1]};
  }
  if (kind == "lens") {
    need(2);
    const int p = to_int(a[1], "p"), q = to_int(a[2], "q");
    return {cw_lens(p, q), "lens" + a[1] + "_" + a[2]};
  }
  if (kind == "grassmannian24") {
    need(0);
    return {cw_grassmannian_2_4(), "grassmannian24"};
  }
  fail(ErrorKind::InvalidInput, "unknown space '" + kind + "'");
}

json stage_json(const StageReport& r, const PipelineConfig& cfg) {
  return {{"cell", r.cell},
          {"dim", r.dim},
          {"rounds", r.rounds},
          {"sphere_vertices_per_round", r.sphere_vertices_per_round},
          {"sphere_vertices", r.sphere_vertices},
          {"sphere_vertices_simplified", r.sphere_vertices_simplified},
          {"vertices_before_contraction", r.vertices_before_contraction},
          {"vertices_after_contraction", r.vertices_after_contraction},
          {"seeds", {{"approximation", r.approx_seed}, {"simplification", r.simplify_seed}, {"contraction", r.contract_seed}}},
          {"method", to_string(cfg.approx.method)},
          {"strategy", to_string(cfg.approx.strategy)},
          {"seconds", r.seconds}};
}

void print_stage(const StageReport& r) {
  std::cout << "stage " << r.cell << " dim " << r.dim << " rounds " << r.rounds << " sphere " << r.sphere_vertices
            << "->" << r.sphere_vertices_simplified << " vertices " << r.vertices_before_contraction << "->"
            << r.vertices_after_contraction << " seconds " << std::fixed << std::setprecision(3) << r.seconds
            << std::defaultfloat << "\n";
}

int cmd_build(const BuildOptions& o) {
  auto [X, stem] = parse_space(o.space);
  PipelineConfig cfg;
  cfg.approx.method = parse_approx_method(o.method);
  cfg.approx.strategy = parse_strategy(o.strategy);
  cfg.approx.pre_subdivisions = o.pre_subdiv;
  cfg.approx.max_rounds = o.max_rounds;
  cfg.approx.star_samples = o.star_samples;
  cfg.contract = o.contract;
  cfg.simplify = o.simplify;
  cfg.seed = o.seed;
  cfg.eps = o.eps;
  cfg.checkpoint_dir = o.checkpoint;
  if (o.max_rounds < 0 || o.pre_subdiv < 0) fail(ErrorKind::InvalidInput, "negative round count");
  const std::string out = o.out.empty() ? stem + ".simp" : o.out;

  auto cw = std::make_shared<const CWComplex>(X);
  std::shared_ptr<const SkeletonStage> st;
  try {
    for (std::size_t i = 0; i < cw->cells.size(); ++i) {
      st = glue_cell(st, cw, i, cfg);
      print_stage(st->report);
      std::cout.flush();
    }
  } catch (const Error&) {
    if (st) {
      const std::string dir = o.checkpoint.empty() ? out + ".partial" : o.checkpoint;
      write_checkpoint(*st, cfg, dir);
      std::cerr << "last completed stage " << st->index << " written to " << dir << "\n";
    }
    throw;
  }

  const auto H = homology(st->complex);
  std::cout << "vertices " << st->complex.num_vertices() << " homology " << homology_string(H) << "\n";
  save_simp(out, st->complex, X.name);
  json report;
  report["space"] = X.name;
  report["seed"] = cfg.seed;
  report["method"] = to_string(cfg.approx.method);
  report["strategy"] = to_string(cfg.approx.strategy);
  report["contract"] = cfg.contract;
  report["simplify"] = cfg.simplify;
  report["vertices"] = st->complex.num_vertices();
  report["homology"] = homology_string(H);
  report["stages"] = json::array();
  for (const auto& r : collect_reports(*st)) report["stages"].push_back(stage_json(r, cfg));
  std::ofstream(std::filesystem::path(out).replace_extension(".json")) << report.dump(2) << '\n';
  return 0;
}

int cmd_homology(const std::string& file, bool mod2) {
  const auto K = load_simp(file);
  if (mod2) {
    const auto b = homology_mod2(K);
    for (std::size_t k = 0; k < b.size(); ++k) std::cout << "H" << k << " " << b[k] << "\n";
    return 0;
  }
  const auto H = homology(K);
  for (std::size_t k = 0; k < H.size(); ++k) {
    std::cout << "H" << k << " betti " << H[k].betti << " torsion";
    for (const auto& t : H[k].torsion) std::cout << " " << t;
    std::cout << "\n";
  }
  std::cout << homology_string(H) << "\n";
  return 0;
}

int cmd_subdivide(const std::string& file, const std::string& method, int n, const std::string& out) {
  const auto m = parse_subdivision_method(method);
  if (n < 0) fail(ErrorKind::InvalidInput, "-n must be non-negative");
  GeometricComplex G{load_simp(file), {}};
  for (int i = 0; i < n; ++i) G = subdivide(G, m).complex;
  std::cout << "vertices " << G.complex.num_vertices() << " maximal " << G.complex.maximal_simplices().size() << "\n";
  if (!out.empty()) save_simp(out, G.complex);
  return 0;
}

int cmd_contract(const std::string& file, std::uint64_t seed, const std::string& out) {
  const auto K = load_simp(file);
  Rng rng(derive_seed(seed, 3));
  const auto R = contract_all(K, rng);
  std::cout << "vertices " << K.num_vertices() << "->" << R.complex.num_vertices() << " contractions "
            << R.trace.size() << "\n";
  if (!out.empty()) save_simp(out, R.complex);
  return 0;
}

// Boundary of the (d+1)-simplex as a .simp file.
int cmd_standard(int d, const std::string& out) {
  if (d < 0) fail(ErrorKind::InvalidInput, "dimension must be non-negative");
  const auto S = standard_sphere(d);
  if (out.empty()) write_simp(std::cout, S.complex());
  else save_simp(out, S.complex());
  return 0;
}

// Weak approximation of the identity of the standard S^d into its k-th subdivision.
int cmd_approx_identity(int d, int k, const std::string& method, const std::string& strategy, int max_rounds,
                        std::uint64_t seed) {
  if (d < 1 || k < 0) fail(ErrorKind::InvalidInput, "need d >= 1 and k >= 0");
  ApproxConfig cfg;
  cfg.method = parse_approx_method(method);
  cfg.strategy = parse_strategy(strategy);
  cfg.max_rounds = max_rounds;
  cfg.seed = seed;
  const auto L = standard_sphere(d);
  auto H = std::make_shared<LocationHierarchy>(L.geom);
  GeometricComplex cur = L.geom;
  for (int i = 0; i < k; ++i) {
    auto R = subdivide(cur, base_method(cfg.method));
    normalize_vertices(R.complex);
    H->push_subdivision(R.complex, R.parent_of);
    cur = R.complex;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto R = approximate(L, [H](const Point& x) { return H->locate(x); }, cfg);
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "rounds " << R.rounds << " vertices " << R.sphere.complex().num_vertices() << " seconds " << std::fixed
            << std::setprecision(3) << sec << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial approximations of CW complexes"};
  app.require_subcommand(1);

  BuildOptions b;
  auto* build = app.add_subcommand("build", "Triangulate a CW complex: sphere d | rp n | lens p q | grassmannian24");
  build->add_option("space", b.space)->required()->expected(1, 3);
  build->add_option("--method", b.method, "bary | edge | del-bary | del-edge")->capture_default_str();
  build->add_option("--strategy", b.strategy, "global | global-norm | generalized")->capture_default_str();
  build->add_option("--pre-subdiv", b.pre_subdiv)->capture_default_str();
  build->add_option("--max-rounds", b.max_rounds)->capture_default_str();
  build->add_option("--star-samples", b.star_samples, "extra samples per edge in the star check")->capture_default_str();
  build->add_flag("--contract,!--no-contract", b.contract)->capture_default_str();
  build->add_flag("--simplify,!--no-simplify", b.simplify)->capture_default_str();
  build->add_option("--seed", b.seed)->capture_default_str();
  build->add_option("--out", b.out, "final .simp; a .json report goes next to it");
  build->add_option("--checkpoint", b.checkpoint, "directory for per-stage checkpoints");
  build->add_option("--eps", b.eps)->capture_default_str();

  std::string file, out, method = "bary", strategy = "global-norm";
  bool mod2 = false;
  int n = 1, d = 2, k = 0, max_rounds = 12;
  std::uint64_t seed = 0;

  auto* hom = app.add_subcommand("homology", "Integral (or mod 2) homology of a .simp file");
  hom->add_option("file", file)->required();
  hom->add_flag("--mod2", mod2);

  auto* sub = app.add_subcommand("subdivide", "Global subdivision of a .simp file");
  sub->add_option("file", file)->required();
  sub->add_option("--method", method, "bary | edge")->capture_default_str();
  sub->add_option("-n", n)->capture_default_str();
  sub->add_option("--out", out);

  auto* con = app.add_subcommand("contract", "Edge contractions under the link condition");
  con->add_option("file", file)->required();
  con->add_option("--seed", seed)->capture_default_str();
  con->add_option("--out", out);

  auto* std_ = app.add_subcommand("standard", "Boundary of the (d+1)-simplex");
  std_->add_option("d", d)->required();
  std_->add_option("--out", out);

  auto* ident = app.add_subcommand("approx-identity", "Approximate the identity S^d -> sd^k S^d");
  ident->add_option("--dim", d)->capture_default_str();
  ident->add_option("-k", k)->capture_default_str();
  ident->add_option("--method", method)->capture_default_str();
  ident->add_option("--strategy", strategy)->capture_default_str();
  ident->add_option("--max-rounds", max_rounds)->capture_default_str();
  ident->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return cmd_build(b);
    if (*hom) return cmd_homology(file, mod2);
    if (*sub) return cmd_subdivide(file, method, n, out);
    if (*con) return cmd_contract(file, seed, out);
    if (*std_) return cmd_standard(d, out);
    if (*ident) return cmd_approx_identity(d, k, method, strategy, max_rounds, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
