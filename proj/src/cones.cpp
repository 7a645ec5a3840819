#include "cwsimp/cones.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "cwsimp/error.hpp"

namespace cwsimp {

namespace {

std::vector<VertexId> ordered(const Simplex& s, const VertexOrder* order) {
  std::vector<VertexId> out = s;
  if (order)
    std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) { return order->at(a) < order->at(b); });
  return out;
}

std::vector<VertexId> ordered_vertices(const SimplicialComplex& K, const VertexOrder* order) {
  return ordered(K.vertices(), order);
}

// The prism pieces over one simplex: [inner x0..xk] + [f(xk)..f(xm)].
template <class Emit>
void prism(const std::vector<VertexId>& x, const VertexMap& inner, const std::function<VertexId(VertexId)>& top,
           Emit&& emit) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    Simplex s;
    for (std::size_t i = 0; i <= k; ++i) s.push_back(inner(x[i]));
    for (std::size_t i = k; i < x.size(); ++i) s.push_back(top(x[i]));
    emit(make_simplex(std::move(s)));
  }
}

}  // namespace

ProductResult product_with_interval(const SimplicialComplex& K, const VertexOrder* order) {
  ProductResult R;
  VertexId next = K.next_vertex_id();
  for (VertexId v : ordered_vertices(K, order)) {
    R.inner.map[v] = next++;
    R.outer.map[v] = v;
  }
  for (const auto& s : K.maximal_simplices())
    prism(ordered(s, order), R.inner, [](VertexId v) { return v; },
          [&](Simplex t) { R.complex.insert_closure(t); });
  return R;
}

ConeResult mapping_cylinder(const SimplicialComplex& K, const VertexMap& f, const SimplicialComplex& L,
                            const VertexOrder* order) {
  if (!is_simplicial_map(f, K, L)) fail(ErrorKind::PreconditionViolation, "map is not simplicial");
  ConeResult R;
  R.complex = L;
  VertexId next = L.next_vertex_id();
  for (VertexId v : ordered_vertices(K, order)) R.inner.map[v] = next++;
  for (const auto& s : K.maximal_simplices())
    prism(ordered(s, order), R.inner, [&](VertexId v) { return f(v); },
          [&](Simplex t) { R.complex.insert_closure(t); });
  return R;
}

ConeResult mapping_cone(const SimplicialComplex& K, const VertexMap& f, const SimplicialComplex& L,
                        const VertexOrder* order) {
  ConeResult R = mapping_cylinder(K, f, L, order);
  const VertexId apex = std::max(R.complex.next_vertex_id(), L.next_vertex_id());
  R.apex = apex;
  for (const auto& s : K.maximal_simplices()) {
    Simplex t = R.inner.image(s);
    t.push_back(apex);
    R.complex.insert_closure(make_simplex(std::move(t)));
  }
  if (K.empty()) R.complex.insert_closure({apex});
  return R;
}

Eigen::VectorXd BallTriangulation::weights(std::size_t i, const Point& x) const {
  if (inverse[i].size() == 0)
    return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(cells[i].size()), -std::numeric_limits<double>::infinity());
  Eigen::VectorXd rhs(x.size() + 1);
  rhs.head(x.size()) = x;
  rhs(x.size()) = 1.0;
  return inverse[i] * rhs;
}

BallTriangulation triangulate_ball(const SphereTriangulation& S, std::shared_ptr<const LocationHierarchy> hierarchy,
                                   const VertexOrder* order) {
  BallTriangulation B;
  B.sphere = hierarchy ? std::move(hierarchy) : std::make_shared<const LocationHierarchy>(S.geom);
  const FacetLocator& outer = B.sphere->finest();
  const int m = S.dim + 1;

  VertexId next = S.complex().next_vertex_id();
  for (VertexId v : ordered_vertices(S.complex(), order)) {
    B.inner.map[v] = next;
    B.geom.coords.emplace(v, S.geom.at(v));
    B.geom.coords.emplace(next, 0.5 * S.geom.at(v));
    ++next;
  }
  B.apex = next;
  B.geom.coords.emplace(B.apex, Point::Zero(m));

  B.quadrant.resize(outer.size());
  auto add_cell = [&](Simplex s, std::size_t q) {
    s = make_simplex(std::move(s));
    B.geom.complex.insert_closure(s);
    Eigen::MatrixXd A(m + 1, m + 1);
    A.topRows(m) = B.geom.points(s);
    A.row(m).setOnes();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    const std::size_t idx = B.cells.size();
    // Cells over flat outer facets are flat too; they never contain a point.
    B.inverse.push_back(lu.isInvertible() ? Eigen::MatrixXd(lu.inverse()) : Eigen::MatrixXd());
    for (VertexId v : s) B.incident[v].push_back(idx);
    B.cells.push_back(std::move(s));
    B.quadrant[q].push_back(idx);
  };
  for (std::size_t q = 0; q < outer.size(); ++q) {
    const auto x = ordered(outer.facet(q), order);
    prism(x, B.inner, [](VertexId v) { return v; }, [&](Simplex t) { add_cell(std::move(t), q); });
    Simplex top = B.inner.image(outer.facet(q));
    top.push_back(B.apex);
    add_cell(std::move(top), q);
  }
  return B;
}

namespace {

// Scales x along its ray so that the unit sphere meets the outer layer; returns the facet used.
Point to_cone(const BallTriangulation& B, const Point& x, double eps, std::size_t& facet) {
  const double r = x.norm();
  if (r > 1.0 + eps) fail(ErrorKind::InvalidInput, "point outside the unit ball");
  facet = B.sphere->locate_facet(x);
  const double rho = B.sphere->finest().plane_radius(facet, x);
  return std::min(r, 1.0) * rho / r * x;
}

// Cells meet along radial edges at the boundary, so the carrier is read off the weight supports
// rather than the cells themselves.
Simplex intersect_containing(const BallTriangulation& B, const Point& y, const std::vector<std::size_t>& cells,
                             double eps) {
  std::optional<Simplex> out;
  for (std::size_t c : cells) {
    const Eigen::VectorXd w = B.weights(c, y);
    if (w.minCoeff() < -eps) continue;
    Simplex support;
    for (std::size_t i = 0; i < B.cells[c].size(); ++i)
      if (w(static_cast<Eigen::Index>(i)) > eps) support.push_back(B.cells[c][i]);
    out = out ? simplex_intersection(*out, support) : support;
  }
  return out ? *out : Simplex{};
}

}  // namespace

Simplex ball_locate(const BallTriangulation& B, const Point& x, double eps) {
  if (x.norm() == 0.0) return {B.apex};
  std::size_t facet;
  const Point y = to_cone(B, x, eps, facet);
  std::size_t seed = B.cells.size();
  double best = -INFINITY;
  for (std::size_t c : B.quadrant[facet]) {
    const double s = B.weights(c, y).minCoeff();
    if (s > best) {
      best = s;
      seed = c;
    }
  }
  std::vector<std::size_t> ring;
  for (VertexId v : B.cells[seed])
    for (std::size_t c : B.incident.at(v)) ring.push_back(c);
  std::sort(ring.begin(), ring.end());
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  Simplex out = intersect_containing(B, y, ring, eps);
  if (out.empty()) {
    const Eigen::VectorXd w = B.weights(seed, y);
    for (std::size_t i = 0; i < B.cells[seed].size(); ++i)
      if (w(static_cast<Eigen::Index>(i)) > eps) out.push_back(B.cells[seed][i]);
  }
  return out;
}

Simplex ball_locate_naive(const BallTriangulation& B, const Point& x, double eps) {
  if (x.norm() == 0.0) return {B.apex};
  const double r = x.norm();
  if (r > 1.0 + eps) fail(ErrorKind::InvalidInput, "point outside the unit ball");
  // Outer radius along the ray: the nearest facet plane met in front among the containing facets.
  const FacetLocator& outer = B.sphere->finest();
  double rho = INFINITY;
  for (std::size_t f = 0; f < outer.size(); ++f)
    if (outer.score(f, x) >= -eps) rho = std::min(rho, outer.plane_radius(f, x));
  const Point y = std::min(r, 1.0) * rho / r * x;
  std::vector<std::size_t> all(B.cells.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Simplex out = intersect_containing(B, y, all, eps);
  if (out.empty()) fail(ErrorKind::GeometryViolation, "no ball cell contains the point");
  return out;
}

}  // namespace cwsimp
