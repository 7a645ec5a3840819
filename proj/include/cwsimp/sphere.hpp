#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cwsimp/complex.hpp"
#include "cwsimp/geometry.hpp"
#include "cwsimp/rng.hpp"
#include "cwsimp/subdivision.hpp"

namespace cwsimp {

/// Triangulation of S^d realized in R^{d+1}, radially projectable onto the unit sphere.
struct SphereTriangulation {
  GeometricComplex geom;
  int dim = 0;
  std::vector<VertexId> anchors;  // vertices of the initial boundary simplex; never removed

  const SimplicialComplex& complex() const { return geom.complex; }
};

// Boundary of the regular (d+1)-simplex inscribed in the unit sphere of R^{d+1}; vertex ids 0..d+1.
SphereTriangulation standard_sphere(int d);

void normalize_vertices(GeometricComplex& G);

/// Radial location data for the maximal simplices of a sphere triangulation.
class FacetLocator {
 public:
  FacetLocator() = default;
  explicit FacetLocator(const GeometricComplex& G);

  std::size_t size() const { return facets_.size(); }
  const Simplex& facet(std::size_t i) const { return facets_[i]; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const std::vector<std::size_t>& incident(VertexId v) const;

  // Weights of the point where the ray through x meets the plane of facet i; empty if it misses forwards.
  std::optional<Eigen::VectorXd> radial_weights(std::size_t i, const Point& x) const;
  // Minimum radial weight, or -inf when the ray misses; the facet contains x when this is >= -eps.
  double score(std::size_t i, const Point& x) const;
  // Distance along the unit ray direction x/|x| to the plane of facet i.
  double plane_radius(std::size_t i, const Point& x) const;

  // Best containing facet over a full scan.
  std::optional<std::size_t> scan(const Point& x, double eps, std::size_t* tested = nullptr) const;
  // Intersection of every containing facet sharing a vertex with `seed`.
  Simplex resolve(const Point& x, std::size_t seed, double eps, std::size_t* tested = nullptr) const;
  // Intersection of every containing facet over a full scan.
  Simplex locate_naive(const Point& x, double eps) const;

 private:
  std::vector<Simplex> facets_;
  std::vector<Eigen::MatrixXd> inverse_;  // inverse of the vertex matrix of each facet
  std::unordered_map<VertexId, std::vector<std::size_t>> incident_;
};

// Location simplex of x/|x| by exhaustive scan: intersection of all facets whose cone contains x.
Simplex radial_location(const GeometricComplex& G, const Point& x, double eps = 1e-10);

struct LocateStats {
  std::size_t facets_tested = 0;
  std::size_t fallbacks = 0;
};

/// Sequence of triangulations of the same sphere, each linked to candidate facets of the next.
class LocationHierarchy {
 public:
  LocationHierarchy() = default;
  explicit LocationHierarchy(const GeometricComplex& base, double eps = 1e-10);

  // Next level is a subdivision of the finest one; parent_of maps its facets to facets of the finest.
  void push_subdivision(const GeometricComplex& G, const std::unordered_map<Simplex, Simplex, SimplexHash>& parent_of);
  // Next level is an arbitrary triangulation of the same sphere (Delaunay rebuild); links are sampled.
  void push_overlay(const GeometricComplex& G);

  std::size_t levels() const { return levels_.size(); }
  const FacetLocator& finest() const { return *levels_.back(); }
  const FacetLocator& level(std::size_t i) const { return *levels_[i]; }

  std::size_t locate_facet(const Point& x, LocateStats* stats = nullptr) const;
  Simplex locate(const Point& x, LocateStats* stats = nullptr) const;

 private:
  std::size_t locate_facet_upto(const Point& x, std::size_t last, LocateStats* stats) const;

  double eps_ = 1e-10;
  std::vector<std::shared_ptr<const FacetLocator>> levels_;
  std::vector<std::vector<std::vector<std::size_t>>> links_;  // links_[i][f]: candidates on level i+1
};

// Delaunay triangulation of points on the unit sphere: the boundary of their convex hull.
SphereTriangulation delaunay_on_sphere(const std::unordered_map<VertexId, Point>& points, int dim,
                                       const std::vector<VertexId>& anchors);

// Vertices of a (generalized when fixed is given) subdivision, normalized and re-triangulated by Delaunay.
struct DelaunayStep {
  SphereTriangulation sphere;
  std::size_t subdivision_vertices = 0;
};
DelaunayStep delaunay_subdivide(const SphereTriangulation& S, SubdivisionMethod method,
                                const SimplicialComplex* fixed = nullptr);

struct SimplifyResult {
  SphereTriangulation sphere;
  VertexMap map;
  std::size_t removed = 0;
};

// Removes random non-anchor vertices v while g maps the closed-star vertex set of v onto a simplex of L.
SimplifyResult delaunay_simplify(const SphereTriangulation& S, const VertexMap& g, const SimplicialComplex& L,
                                 Rng& rng, const std::vector<VertexId>& protect = {});

// Great-circle distance between unit vectors.
double geodesic_distance(const Point& x, const Point& y);

}  // namespace cwsimp
