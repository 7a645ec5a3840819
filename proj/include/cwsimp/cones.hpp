#pragma once

#include <memory>
#include <optional>

#include "cwsimp/complex.hpp"
#include "cwsimp/sphere.hpp"
#include "cwsimp/subdivision.hpp"

namespace cwsimp {

/// K x [0,1] triangulated through a vertex order: sigma_k = [x0..xk, xk'..xm'].
struct ProductResult {
  SimplicialComplex complex;
  VertexMap inner;  // v -> (v, 0); fresh ids
  VertexMap outer;  // v -> (v, 1); the original ids
};
ProductResult product_with_interval(const SimplicialComplex& K, const VertexOrder* order = nullptr);

/// Mapping cylinder (and optionally cone) of a simplicial f: K -> L. L keeps its ids.
struct ConeResult {
  SimplicialComplex complex;
  VertexMap inner;  // vertices of K -> their fresh ids
  std::optional<VertexId> apex;
};
ConeResult mapping_cylinder(const SimplicialComplex& K, const VertexMap& f, const SimplicialComplex& L,
                            const VertexOrder* order = nullptr);
ConeResult mapping_cone(const SimplicialComplex& K, const VertexMap& f, const SimplicialComplex& L,
                        const VertexOrder* order = nullptr);

/// Cone over K x [0,1] realized in the closed unit ball: outer layer at the sphere vertices,
/// inner layer at half of them, apex at the origin.
struct BallTriangulation {
  GeometricComplex geom;
  VertexMap inner;  // sphere vertex -> inner vertex id
  VertexId apex = 0;
  std::shared_ptr<const LocationHierarchy> sphere;     // locator of the outer sphere
  std::vector<Simplex> cells;                          // maximal simplices of the ball
  std::vector<std::vector<std::size_t>> quadrant;      // per outer facet: indices into cells
  std::vector<Eigen::MatrixXd> inverse;                // per cell: inverse of [points; 1...1]
  std::unordered_map<VertexId, std::vector<std::size_t>> incident;

  // Barycentric weights of x in cell i.
  Eigen::VectorXd weights(std::size_t i, const Point& x) const;
};

BallTriangulation triangulate_ball(const SphereTriangulation& S,
                                   std::shared_ptr<const LocationHierarchy> hierarchy = nullptr,
                                   const VertexOrder* order = nullptr);

// Location simplex of x in the closed unit ball. The ball is identified with the triangulated
// cone by scaling each ray so that the unit sphere lands on the outer layer.
Simplex ball_locate(const BallTriangulation& B, const Point& x, double eps = 1e-10);
// Reference version scanning every cell; same identification.
Simplex ball_locate_naive(const BallTriangulation& B, const Point& x, double eps = 1e-10);

}  // namespace cwsimp
