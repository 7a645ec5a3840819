#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cwsimp/complex.hpp"
#include "cwsimp/rng.hpp"
#include "cwsimp/sphere.hpp"

namespace cwsimp {

// Location of f(x) in the target complex, for a point x of the source sphere given as a unit vector.
using LocationFn = std::function<Simplex(const Point&)>;

enum class Strategy { Global, GlobalNormalized, Generalized };
enum class ApproxMethod { Barycentric, Edgewise, DelaunayBarycentric, DelaunayEdgewise };

Strategy parse_strategy(const std::string& s);
ApproxMethod parse_approx_method(const std::string& s);
std::string to_string(Strategy s);
std::string to_string(ApproxMethod m);
bool is_delaunay(ApproxMethod m);
SubdivisionMethod base_method(ApproxMethod m);

struct ApproxConfig {
  ApproxMethod method = ApproxMethod::DelaunayEdgewise;
  Strategy strategy = Strategy::Generalized;
  int max_rounds = 12;
  int pre_subdivisions = 0;
  std::uint64_t seed = 0;
  bool build_hierarchy = true;
  // Extra points per edge whose images must also agree with the star of a vertex; higher simplices
  // contribute their barycenter. 0 keeps the plain vertex-only check.
  int star_samples = 0;
};

struct StarCheck {
  std::vector<VertexId> failing;  // sorted
  std::unordered_map<VertexId, std::vector<VertexId>> witnesses;  // admissible images of passing vertices
};

// Weak star condition: v passes when the location simplices over its closed star share a vertex.
StarCheck weak_star_check(const SimplicialComplex& K, const std::unordered_map<VertexId, Simplex>& locations);

// Locations of the sample points of each simplex of dimension >= 1.
using SampleLocations = std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash>;
// Narrows the witnesses of `check` by the samples of every simplex in the open star of each vertex.
void restrict_by_samples(StarCheck& check, const SampleLocations& samples);
// Sample points of a simplex: `per_edge` evenly spaced interior points of an edge, the barycenter otherwise.
std::vector<Point> sample_points(const GeometricComplex& G, const Simplex& s, int per_edge);

// Picks one witness per vertex uniformly at random, vertices visited in ascending order.
VertexMap choose_weak_approximation(const StarCheck& check, Rng& rng);

struct RoundRecord {
  std::size_t vertices = 0;
  std::size_t maximal_simplices = 0;
  std::size_t failing = 0;
};

struct ApproxResult {
  SphereTriangulation sphere;
  VertexMap map;
  int rounds = 0;                    // subdivisions performed inside the loop
  std::vector<RoundRecord> history;  // one entry per star check
  std::size_t evaluations = 0;       // calls to the location function
  std::shared_ptr<LocationHierarchy> hierarchy;
};

// Iterated subdivision of S until a weak simplicial approximation of f exists.
// Throws Error(NonTermination) when max_rounds subdivisions were not enough.
ApproxResult approximate(const SphereTriangulation& S, const LocationFn& f, const ApproxConfig& cfg);

// Same loop for a complex that is not a sphere: coordinates are used as given and never normalized.
// Only the non-Delaunay methods apply.
struct ComplexApproxResult {
  GeometricComplex complex;
  VertexMap map;
  int rounds = 0;
  std::vector<RoundRecord> history;
};
ComplexApproxResult approximate_complex(const GeometricComplex& K, const LocationFn& f, const ApproxConfig& cfg);

}  // namespace cwsimp
