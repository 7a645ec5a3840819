#include "cwsimp/pipeline.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "cwsimp/error.hpp"
#include "cwsimp/io.hpp"

namespace cwsimp {

Simplex stage_locate(const SkeletonStage& stage, const CWPoint& p) {
  if (p.cell > stage.index) fail(ErrorKind::PreconditionViolation, "point lies in a cell not yet attached");
  if (p.cell < stage.index) return stage.quotient.image(stage_locate(*stage.prev, p));
  const CWCell& cell = stage.cw->cells[stage.index];
  if (cell.dim == 0) return {stage.point_vertex};
  const double r = p.coords.norm();
  if (r < 0.5) {
    const Simplex b = ball_locate(*stage.ball, 2.0 * p.coords);
    return stage.quotient.image(stage.ball_to_cone.image(b));
  }
  const CWPoint q = cell.glue(p.coords / r);
  if (q.cell >= stage.index) fail(ErrorKind::InvalidInput, "attaching map lands in a later cell");
  return stage.quotient.image(stage_locate(*stage.prev, q));
}

namespace {

enum Stream : std::uint64_t { kApprox = 1, kSimplify = 2, kContract = 3 };

std::uint64_t stage_seed(const PipelineConfig& cfg, std::size_t index, Stream s) {
  return derive_seed(derive_seed(cfg.seed, index), s);
}

VertexMap identity_on(const SimplicialComplex& K) {
  VertexMap m;
  for (VertexId v : K.vertices()) m.map[v] = v;
  return m;
}

}  // namespace

std::shared_ptr<const SkeletonStage> glue_cell(std::shared_ptr<const SkeletonStage> prev,
                                               std::shared_ptr<const CWComplex> cw, std::size_t index,
                                               const PipelineConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const CWCell& cell = cw->cells.at(index);
  auto st = std::make_shared<SkeletonStage>();
  st->index = index;
  st->cw = cw;
  st->prev = prev;
  st->report.cell = index;
  st->report.dim = cell.dim;

  if (cell.dim == 0) {
    st->complex = prev ? prev->complex : SimplicialComplex{};
    st->point_vertex = st->complex.next_vertex_id();
    st->complex.insert_closure({st->point_vertex});
    st->quotient = identity_on(st->complex);
    st->report.vertices_before_contraction = st->report.vertices_after_contraction = st->complex.num_vertices();
  } else {
    if (!prev) fail(ErrorKind::InvalidInput, "the first cell must be a 0-cell");
    const SkeletonStage& P = *prev;
    ApproxConfig ac = cfg.approx;
    ac.seed = st->report.approx_seed = stage_seed(cfg, index, kApprox);
    const LocationFn f = [&](const Point& u) { return stage_locate(P, cell.glue(u)); };
    ApproxResult A = approximate(standard_sphere(cell.dim - 1), f, ac);
    st->report.rounds = A.rounds;
    for (const auto& h : A.history) st->report.sphere_vertices_per_round.push_back(h.vertices);
    st->report.sphere_vertices = A.sphere.complex().num_vertices();

    SphereTriangulation S = std::move(A.sphere);
    VertexMap g = std::move(A.map);
    std::shared_ptr<const LocationHierarchy> H = A.hierarchy;
    if (cfg.simplify && is_delaunay(ac.method) && S.dim >= 1) {
      Rng rng(st->report.simplify_seed = stage_seed(cfg, index, kSimplify));
      SimplifyResult R = delaunay_simplify(S, g, P.complex, rng);
      S = std::move(R.sphere);
      g = std::move(R.map);
      H = std::make_shared<const LocationHierarchy>(S.geom, cfg.eps);
    }
    st->report.sphere_vertices_simplified = S.complex().num_vertices();

    st->ball = triangulate_ball(S, H);
    const ConeResult C = mapping_cone(S.complex(), g, P.complex);
    for (const auto& [v, id] : st->ball->inner.map) st->ball_to_cone.map[id] = C.inner(v);
    for (const auto& [v, img] : g.map) st->ball_to_cone.map[v] = img;
    st->ball_to_cone.map[st->ball->apex] = *C.apex;
    st->approximation = std::move(g);

    st->report.vertices_before_contraction = C.complex.num_vertices();
    if (cfg.contract) {
      Rng rng(st->report.contract_seed = stage_seed(cfg, index, kContract));
      ContractionResult R = contract_all(C.complex, rng);
      st->complex = std::move(R.complex);
      st->quotient = std::move(R.quotient);
      st->contraction = std::move(R.trace);
    } else {
      st->complex = C.complex;
      st->quotient = identity_on(C.complex);
    }
    st->report.vertices_after_contraction = st->complex.num_vertices();
  }
  st->report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!cfg.checkpoint_dir.empty()) write_checkpoint(*st, cfg, cfg.checkpoint_dir);
  return st;
}

std::shared_ptr<const SkeletonStage> build_cw(const CWComplex& X, const PipelineConfig& cfg) {
  if (X.cells.empty()) fail(ErrorKind::InvalidInput, "CW complex has no cells");
  auto cw = std::make_shared<const CWComplex>(X);
  std::shared_ptr<const SkeletonStage> st;
  for (std::size_t i = 0; i < X.cells.size(); ++i) st = glue_cell(st, cw, i, cfg);
  return st;
}

std::vector<StageReport> collect_reports(const SkeletonStage& last) {
  std::vector<StageReport> out;
  for (const SkeletonStage* s = &last; s; s = s->prev.get()) out.push_back(s->report);
  std::reverse(out.begin(), out.end());
  return out;
}

void write_checkpoint(const SkeletonStage& stage, const PipelineConfig& cfg, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string base = dir + "/stage_" + std::to_string(stage.index);
  save_simp(base + ".simp", stage.complex, stage.cw->name + " stage " + std::to_string(stage.index));

  auto sorted_pairs = [](const VertexMap& m) {
    std::vector<std::pair<VertexId, VertexId>> v(m.map.begin(), m.map.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  nlohmann::json meta;
  meta["space"] = stage.cw->name;
  meta["stage"] = stage.index;
  meta["cell"] = stage.cw->cells[stage.index].name;
  meta["cell_dim"] = stage.cw->cells[stage.index].dim;
  meta["seed"] = cfg.seed;
  meta["method"] = to_string(cfg.approx.method);
  meta["strategy"] = to_string(cfg.approx.strategy);
  meta["vertex_order"] = "ascending-id";
  meta["rounds"] = stage.report.rounds;
  meta["seeds"] = {{"approximation", stage.report.approx_seed},
                   {"simplification", stage.report.simplify_seed},
                   {"contraction", stage.report.contract_seed}};
  meta["approximation"] = sorted_pairs(stage.approximation);
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& s : stage.contraction) trace.push_back({s.a, s.b, s.c});
  meta["contraction"] = trace;
  meta["vertices"] = stage.complex.num_vertices();
  std::ofstream(base + ".json") << meta.dump(2) << '\n';
}

}  // namespace cwsimp
