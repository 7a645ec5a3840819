#include "cwsimp/approximation.hpp"

#include <algorithm>

#include "cwsimp/error.hpp"

namespace cwsimp {

Strategy parse_strategy(const std::string& s) {
  if (s == "global") return Strategy::Global;
  if (s == "global-norm" || s == "global-normalized") return Strategy::GlobalNormalized;
  if (s == "generalized") return Strategy::Generalized;
  fail(ErrorKind::InvalidInput, "unknown strategy '" + s + "'");
}

ApproxMethod parse_approx_method(const std::string& s) {
  if (s == "bary" || s == "barycentric") return ApproxMethod::Barycentric;
  if (s == "edge" || s == "edgewise") return ApproxMethod::Edgewise;
  if (s == "del-bary") return ApproxMethod::DelaunayBarycentric;
  if (s == "del-edge") return ApproxMethod::DelaunayEdgewise;
  fail(ErrorKind::InvalidInput, "unknown method '" + s + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Global: return "global";
    case Strategy::GlobalNormalized: return "global-norm";
    case Strategy::Generalized: return "generalized";
  }
  return "?";
}

std::string to_string(ApproxMethod m) {
  switch (m) {
    case ApproxMethod::Barycentric: return "bary";
    case ApproxMethod::Edgewise: return "edge";
    case ApproxMethod::DelaunayBarycentric: return "del-bary";
    case ApproxMethod::DelaunayEdgewise: return "del-edge";
  }
  return "?";
}

bool is_delaunay(ApproxMethod m) {
  return m == ApproxMethod::DelaunayBarycentric || m == ApproxMethod::DelaunayEdgewise;
}

SubdivisionMethod base_method(ApproxMethod m) {
  return (m == ApproxMethod::Barycentric || m == ApproxMethod::DelaunayBarycentric) ? SubdivisionMethod::Barycentric
                                                                                     : SubdivisionMethod::Edgewise;
}

StarCheck weak_star_check(const SimplicialComplex& K, const std::unordered_map<VertexId, Simplex>& locations) {
  StarCheck out;
  const Adjacency adj = vertex_adjacency(K);
  for (VertexId v : K.vertices()) {
    Simplex common = locations.at(v);
    for (VertexId u : adj.at(v)) {
      if (common.empty()) break;
      common = simplex_intersection(common, locations.at(u));
    }
    if (common.empty()) out.failing.push_back(v);
    else out.witnesses.emplace(v, std::move(common));
  }
  return out;
}

void restrict_by_samples(StarCheck& check, const SampleLocations& samples) {
  for (const auto& [s, locs] : samples)
    for (VertexId v : s) {
      auto it = check.witnesses.find(v);
      if (it == check.witnesses.end()) continue;
      for (const auto& loc : locs) {
        it->second = simplex_intersection(it->second, loc);
        if (it->second.empty()) break;
      }
      if (it->second.empty()) {
        check.failing.push_back(v);
        check.witnesses.erase(it);
      }
    }
  std::sort(check.failing.begin(), check.failing.end());
}

std::vector<Point> sample_points(const GeometricComplex& G, const Simplex& s, int per_edge) {
  if (s.size() != 2) return {G.barycenter(s)};
  std::vector<Point> out;
  for (int i = 1; i <= per_edge; ++i) {
    const double t = static_cast<double>(i) / (per_edge + 1);
    out.push_back((1 - t) * G.at(s[0]) + t * G.at(s[1]));
  }
  return out;
}

VertexMap choose_weak_approximation(const StarCheck& check, Rng& rng) {
  std::vector<VertexId> verts;
  for (const auto& [v, w] : check.witnesses) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  VertexMap g;
  for (VertexId v : verts) {
    const auto& w = check.witnesses.at(v);
    g.map[v] = w[rng.index(w.size())];
  }
  return g;
}

namespace {

RoundRecord record(const SimplicialComplex& K, const StarCheck& c) {
  return {K.num_vertices(), K.maximal_simplices().size(), c.failing.size()};
}

void evaluate(const GeometricComplex& G, const LocationFn& f, bool project,
              std::unordered_map<VertexId, Simplex>& cache, std::size_t& evaluations) {
  for (VertexId v : G.complex.vertices()) {
    if (cache.count(v)) continue;
    Point x = G.at(v);
    if (project) x.normalize();
    Simplex loc = f(x);
    if (loc.empty()) fail(ErrorKind::Internal, "location function returned an empty simplex");
    cache.emplace(v, std::move(loc));
    ++evaluations;
  }
}

void evaluate_samples(const GeometricComplex& G, const LocationFn& f, int per_edge, SampleLocations& cache,
                      std::size_t& evaluations) {
  for (int k = 1; k <= G.complex.dimension(); ++k)
    for (const auto& s : G.complex.bucket(k)) {
      if (cache.count(s)) continue;
      std::vector<Simplex> locs;
      for (const Point& x : sample_points(G, s, per_edge)) {
        if (x.norm() == 0.0) fail(ErrorKind::DegenerateGeometry, "sample point at the origin");
        locs.push_back(f(x.normalized()));
        ++evaluations;
      }
      cache.emplace(s, std::move(locs));
    }
}

// Samples of the current complex only.
SampleLocations current_samples(const SimplicialComplex& K, const SampleLocations& cache) {
  SampleLocations out;
  for (int k = 1; k <= K.dimension(); ++k)
    for (const auto& s : K.bucket(k)) out.emplace(s, cache.at(s));
  return out;
}

[[noreturn]] void give_up(int rounds, const std::vector<RoundRecord>& history) {
  std::string msg = "no weak simplicial approximation after " + std::to_string(rounds) + " subdivisions (failing:";
  for (const auto& r : history) msg += " " + std::to_string(r.failing);
  fail(ErrorKind::NonTermination, msg + ")");
}

}  // namespace

ApproxResult approximate(const SphereTriangulation& S, const LocationFn& f, const ApproxConfig& cfg) {
  if (cfg.max_rounds < 0 || cfg.pre_subdivisions < 0 || cfg.star_samples < 0) fail(ErrorKind::InvalidInput, "negative round limits");
  if (is_delaunay(cfg.method) && cfg.strategy == Strategy::Global)
    fail(ErrorKind::InvalidInput, "Delaunay methods always normalize; use global-norm or generalized");
  const SubdivisionMethod sub = base_method(cfg.method);
  const bool normalize = cfg.strategy != Strategy::Global;

  ApproxResult out;
  SphereTriangulation cur = S;
  if (cfg.build_hierarchy) out.hierarchy = std::make_shared<LocationHierarchy>(cur.geom);

  auto step = [&](const SimplicialComplex* fixed) {
    if (is_delaunay(cfg.method)) {
      cur = delaunay_subdivide(cur, sub, fixed).sphere;
      if (out.hierarchy) out.hierarchy->push_overlay(cur.geom);
      return;
    }
    SubdivisionResult R = fixed ? subdivide(cur.geom, sub, *fixed) : subdivide(cur.geom, sub);
    if (normalize) normalize_vertices(R.complex);
    if (out.hierarchy) out.hierarchy->push_subdivision(R.complex, R.parent_of);
    cur.geom = std::move(R.complex);
  };

  for (int i = 0; i < cfg.pre_subdivisions; ++i) step(nullptr);

  Rng rng(cfg.seed);
  std::unordered_map<VertexId, Simplex> cache;
  SampleLocations sample_cache;
  for (;;) {
    evaluate(cur.geom, f, true, cache, out.evaluations);
    StarCheck check = weak_star_check(cur.complex(), cache);
    if (cfg.star_samples > 0) {
      evaluate_samples(cur.geom, f, cfg.star_samples, sample_cache, out.evaluations);
      SampleLocations now = current_samples(cur.complex(), sample_cache);
      restrict_by_samples(check, now);
      sample_cache = std::move(now);
    }
    out.history.push_back(record(cur.complex(), check));
    if (check.failing.empty()) {
      out.map = choose_weak_approximation(check, rng);
      break;
    }
    if (out.rounds >= cfg.max_rounds) give_up(out.rounds, out.history);
    if (cfg.strategy == Strategy::Generalized) {
      const SimplicialComplex fixed = unsatisfied_subcomplex(cur.complex(), check.failing);
      step(&fixed);
    } else {
      step(nullptr);
    }
    ++out.rounds;
    // Drop cache entries of vertices that a Delaunay rebuild may have discarded.
    for (auto it = cache.begin(); it != cache.end();)
      it = cur.complex().contains_vertex(it->first) ? std::next(it) : cache.erase(it);
  }
  out.sphere = std::move(cur);
  return out;
}

ComplexApproxResult approximate_complex(const GeometricComplex& K, const LocationFn& f, const ApproxConfig& cfg) {
  if (is_delaunay(cfg.method)) fail(ErrorKind::InvalidInput, "Delaunay methods need a sphere");
  const SubdivisionMethod sub = base_method(cfg.method);
  ComplexApproxResult out;
  out.complex = K;
  for (int i = 0; i < cfg.pre_subdivisions; ++i) out.complex = subdivide(out.complex, sub).complex;
  Rng rng(cfg.seed);
  std::unordered_map<VertexId, Simplex> cache;
  std::size_t evaluations = 0;
  for (;;) {
    evaluate(out.complex, f, false, cache, evaluations);
    StarCheck check = weak_star_check(out.complex.complex, cache);
    out.history.push_back(record(out.complex.complex, check));
    if (check.failing.empty()) {
      out.map = choose_weak_approximation(check, rng);
      return out;
    }
    if (out.rounds >= cfg.max_rounds) give_up(out.rounds, out.history);
    if (cfg.strategy == Strategy::Generalized)
      out.complex = subdivide(out.complex, sub, unsatisfied_subcomplex(out.complex.complex, check.failing)).complex;
    else
      out.complex = subdivide(out.complex, sub).complex;
    ++out.rounds;
  }
}

}  // namespace cwsimp
