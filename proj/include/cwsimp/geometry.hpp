#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "cwsimp/complex.hpp"

namespace cwsimp {

struct Tolerances {
  double eps = 1e-10;       // barycentric sign tests
  double eps_aff = 1e-8;    // affine residual for point-in-simplex
  double eps_hull = 1e-9;   // hull facet side tests
  double eps_sum = 1e-9;    // barycentric weights summing to one
  double eps_rank = 1e-10;  // affine independence
};

struct Barycentric {
  Eigen::VectorXd weights;
  double residual = 0.0;  // distance from x to the affine hull of the simplex
};

// P holds one vertex per column. Least squares via column-pivoted QR; throws on affinely dependent input.
Barycentric barycentric_coordinates(const Eigen::MatrixXd& P, const Point& x, double eps_rank = 1e-10);

bool point_in_simplex(const Eigen::MatrixXd& P, const Point& x, const Tolerances& tol = {});

struct RayHit {
  double t;
  Point point;
};

// Intersection of the ray {t*dir : t > 0} with the hyperplane spanned by the m facet vertices in R^m.
std::optional<RayHit> ray_facet_intersection(const Point& dir, const Eigen::MatrixXd& facet, double eps = 1e-10);

// Unit normal n and offset of the hyperplane {y : n.y = off} through the m columns of F in R^m.
// Returns false when the columns are affinely dependent.
bool hyperplane_through(const Eigen::MatrixXd& F, Eigen::VectorXd& n, double& off);

// Deterministic symbolic-perturbation stand-in: p plus a 1e-9 offset seeded by the point index.
Point perturbed(const Point& p, std::size_t index, double magnitude = 1e-9);

// Boundary facets of the convex hull of points in R^m (m <= 6), as sorted index lists.
// Randomized incremental construction with conflict lists; predicates run on perturbed copies.
std::vector<std::vector<std::size_t>> convex_hull(const std::vector<Point>& points, std::uint64_t seed = 0);
// Same, with the perturbation of point i keyed by keys[i] so sub-hulls perturb consistently.
std::vector<std::vector<std::size_t>> convex_hull(const std::vector<Point>& points,
                                                  const std::vector<std::uint64_t>& keys, std::uint64_t seed = 0);

}  // namespace cwsimp
