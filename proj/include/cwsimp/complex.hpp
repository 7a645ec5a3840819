#pragma once

#include <Eigen/Dense>

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cwsimp/simplex.hpp"

namespace cwsimp {

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;
using Point = Eigen::VectorXd;

/// Abstract simplicial complex stored as the full closure of its simplices, bucketed by dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  static SimplicialComplex from_maximal(const std::vector<Simplex>& simplices);

  // Inserts s together with all of its faces. s must be sorted.
  void insert_closure(const Simplex& s);

  bool contains(const Simplex& s) const;
  bool contains_vertex(VertexId v) const;
  bool empty() const { return total_ == 0; }
  std::size_t size() const { return total_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int k) const;
  std::size_t num_vertices() const { return count(0); }

  std::vector<VertexId> vertices() const;
  std::vector<Simplex> simplices() const;
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::vector<Simplex> maximal_simplices() const;
  const SimplexSet& bucket(int k) const;

  // Smallest id strictly larger than every vertex id in use.
  VertexId next_vertex_id() const { return next_id_; }

  bool operator==(const SimplicialComplex& o) const;

 private:
  std::vector<SimplexSet> by_dim_;
  std::size_t total_ = 0;
  VertexId next_id_ = 0;
};

SimplexSet star(const SimplicialComplex& K, const Simplex& s);  // simplices containing s; not closed
SimplicialComplex closed_star(const SimplicialComplex& K, const Simplex& s);
SimplicialComplex link(const SimplicialComplex& K, const Simplex& s);
SimplicialComplex skeleton(const SimplicialComplex& K, int k);
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<VertexId>& verts);
long euler_characteristic(const SimplicialComplex& K);

// Checks closure under faces of an arbitrary simplex set.
bool is_simplicial(const SimplexSet& simplices);

using Adjacency = std::unordered_map<VertexId, std::vector<VertexId>>;
// Neighbours of each vertex through edges, sorted. Every vertex gets an entry.
Adjacency vertex_adjacency(const SimplicialComplex& K);
// Vertex set of the closed star of v: v plus its neighbours, sorted.
std::vector<VertexId> closed_star_vertices(const Adjacency& adj, VertexId v);

/// Complex with a coordinate per vertex.
struct GeometricComplex {
  SimplicialComplex complex;
  std::unordered_map<VertexId, Point> coords;

  int ambient_dim() const;
  const Point& at(VertexId v) const;
  Eigen::MatrixXd points(const Simplex& s) const;  // one column per vertex
  Point barycenter(const Simplex& s) const;
};

double max_edge_length(const GeometricComplex& G);
// Verifies every simplex is affinely independent and every vertex has coordinates.
void validate(const GeometricComplex& G, double eps_rank = 1e-10);

/// Vertex map between complexes; missing vertices are an error.
struct VertexMap {
  std::unordered_map<VertexId, VertexId> map;

  VertexId operator()(VertexId v) const;
  bool has(VertexId v) const { return map.count(v) > 0; }
  Simplex image(const Simplex& s) const;
  // this after first: v -> this(first(v)).
  VertexMap after(const VertexMap& first) const;
};

// A vertex map is simplicial when every simplex of K lands on a simplex of L.
bool is_simplicial_map(const VertexMap& f, const SimplicialComplex& K, const SimplicialComplex& L);

}  // namespace cwsimp
