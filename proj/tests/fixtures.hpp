#pragma once

#include <vector>

#include "cwsimp/complex.hpp"
#include "cwsimp/rng.hpp"

namespace fixtures {

using cwsimp::Simplex;
using cwsimp::SimplicialComplex;

inline SimplicialComplex boundary_of_simplex(int n) {
  Simplex all;
  for (int i = 0; i <= n; ++i) all.push_back(static_cast<cwsimp::VertexId>(i));
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) facets.push_back(cwsimp::without_vertex(all, skip));
  return SimplicialComplex::from_maximal(facets);
}

inline SimplicialComplex polygon(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back(cwsimp::make_simplex({static_cast<cwsimp::VertexId>(i), static_cast<cwsimp::VertexId>((i + 1) % n)}));
  return SimplicialComplex::from_maximal(edges);
}

// Seven-vertex torus.
inline SimplicialComplex torus7() {
  std::vector<Simplex> t;
  for (cwsimp::VertexId i = 0; i < 7; ++i) {
    t.push_back(cwsimp::make_simplex({i, (i + 1) % 7, (i + 3) % 7}));
    t.push_back(cwsimp::make_simplex({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return SimplicialComplex::from_maximal(t);
}

// Six-vertex projective plane.
inline SimplicialComplex rp2_6() {
  return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
                                          {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

// Random complex: a handful of random maximal simplices over few vertices.
inline SimplicialComplex random_complex(cwsimp::Rng& rng, int max_vertices = 7, int max_dim = 3, int count = 6) {
  SimplicialComplex K;
  const int nv = 3 + static_cast<int>(rng.index(static_cast<std::size_t>(max_vertices - 2)));
  const int ns = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(count)));
  for (int s = 0; s < ns; ++s) {
    const int d = static_cast<int>(rng.index(static_cast<std::size_t>(std::min(max_dim, nv - 1) + 1)));
    std::vector<cwsimp::VertexId> verts;
    for (int i = 0; i < nv; ++i) verts.push_back(static_cast<cwsimp::VertexId>(i));
    rng.shuffle(verts);
    verts.resize(static_cast<std::size_t>(d + 1));
    K.insert_closure(cwsimp::make_simplex(verts));
  }
  return K;
}

}  // namespace fixtures
