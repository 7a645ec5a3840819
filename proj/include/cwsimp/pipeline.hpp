#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwsimp/approximation.hpp"
#include "cwsimp/cones.hpp"
#include "cwsimp/contraction.hpp"
#include "cwsimp/cw.hpp"

namespace cwsimp {

struct PipelineConfig {
  // Gluing maps of later cells are sharply non-uniform, so the vertex-only check is backed by edge samples.
  ApproxConfig approx{.star_samples = 8};
  bool contract = true;
  bool simplify = true;
  std::uint64_t seed = 0;
  double eps = 1e-10;
  std::string checkpoint_dir;  // empty: no checkpoints
};

struct StageReport {
  std::size_t cell = 0;
  int dim = 0;
  int rounds = 0;
  std::vector<std::size_t> sphere_vertices_per_round;
  std::size_t sphere_vertices = 0;             // after approximation
  std::size_t sphere_vertices_simplified = 0;  // after Delaunay simplification
  std::size_t vertices_before_contraction = 0;
  std::size_t vertices_after_contraction = 0;
  std::uint64_t approx_seed = 0, simplify_seed = 0, contract_seed = 0;
  double seconds = 0;
};

/// K_i: the triangulated i-th skeleton stage, with everything needed to locate points of cells 0..i.
struct SkeletonStage {
  std::size_t index = 0;
  std::shared_ptr<const CWComplex> cw;
  std::shared_ptr<const SkeletonStage> prev;
  SimplicialComplex complex;  // final complex, after optional contraction

  // Attached-cell data (dimension >= 1).
  std::optional<BallTriangulation> ball;
  VertexMap approximation;  // outer sphere -> previous complex
  VertexMap ball_to_cone;   // ball vertex -> mapping-cone vertex
  VertexMap quotient;       // mapping-cone vertex -> final vertex
  std::vector<ContractionStep> contraction;
  VertexId point_vertex = 0;  // for 0-cells

  StageReport report;
};

// Location simplex in K_i of a point of one of the cells 0..i.
Simplex stage_locate(const SkeletonStage& stage, const CWPoint& p);

std::shared_ptr<const SkeletonStage> glue_cell(std::shared_ptr<const SkeletonStage> prev,
                                               std::shared_ptr<const CWComplex> cw, std::size_t index,
                                               const PipelineConfig& cfg);

std::shared_ptr<const SkeletonStage> build_cw(const CWComplex& X, const PipelineConfig& cfg);

// Writes <dir>/stage_<i>.simp and stage_<i>.json.
void write_checkpoint(const SkeletonStage& stage, const PipelineConfig& cfg, const std::string& dir);

std::vector<StageReport> collect_reports(const SkeletonStage& last);

}  // namespace cwsimp
