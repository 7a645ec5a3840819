#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cwsimp/complex.hpp"

namespace cwsimp {

enum class SubdivisionMethod { Barycentric, Edgewise };

SubdivisionMethod parse_subdivision_method(const std::string& s);

// Rank of each vertex in a total order; ascending ids when absent.
using VertexOrder = std::unordered_map<VertexId, std::size_t>;

struct SubdivisionResult {
  GeometricComplex complex;  // coordinates are filled only when the input had them
  // Each new maximal simplex maps to the old maximal simplex it refines.
  std::unordered_map<Simplex, Simplex, SimplexHash> parent_of;
  // Each vertex maps to the old simplex whose barycenter or midpoint it is (old vertices map to themselves).
  std::unordered_map<VertexId, Simplex> carrier;
};

SubdivisionResult barycentric_subdivide(const GeometricComplex& G);
SubdivisionResult edgewise_subdivide(const GeometricComplex& G, const VertexOrder* order = nullptr);

// Subdivides everything except the subcomplex `fixed`, which is kept verbatim.
SubdivisionResult generalized_barycentric(const GeometricComplex& G, const SimplicialComplex& fixed);
SubdivisionResult generalized_edgewise(const GeometricComplex& G, const SimplicialComplex& fixed,
                                       const VertexOrder* order = nullptr);

SubdivisionResult subdivide(const GeometricComplex& G, SubdivisionMethod method);
SubdivisionResult subdivide(const GeometricComplex& G, SubdivisionMethod method, const SimplicialComplex& fixed);

// K minus the open stars of the failing vertices.
SimplicialComplex unsatisfied_subcomplex(const SimplicialComplex& K, const std::vector<VertexId>& failing);

// A local point of the standard d-simplex: vertex (i, i) or midpoint of edge (i, j), i < j.
using LocalPoint = std::pair<int, int>;
using LocalPiece = std::vector<LocalPoint>;

// Reparation table row for a d-simplex (d <= 3) whose failing local vertices are the bits of vmask.
const std::vector<LocalPiece>& reparation_pieces(int d, unsigned vmask);

}  // namespace cwsimp
