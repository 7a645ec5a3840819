#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "cwsimp/complex.hpp"

namespace cwsimp {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix identity(std::size_t n);

  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
};

/// Sparse integer matrix stored by columns; entries are (row, value), rows ascending.
struct SparseIntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;

  IntMatrix dense() const;
};

// Boundary map C_k -> C_{k-1}. Rows and columns follow the sorted simplex lists of K.
// Column of [v0..vk] has (-1)^i at the face dropping v_i.
SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int k);

struct SmithResult {
  IntMatrix D;  // U * A * V
  IntMatrix U, V;
  std::vector<BigInt> diagonal;  // non-zero invariant factors, each dividing the next
};

SmithResult smith_normal_form(const IntMatrix& A, bool with_transforms = true);

struct InvariantFactors {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, ascending
};

// Invariant factors of a sparse matrix: unit pivots are eliminated sparsely, the rest goes through the dense SNF.
InvariantFactors invariant_factors(const SparseIntMatrix& A);
std::size_t rank_mod2(const SparseIntMatrix& A);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // orders of the cyclic torsion summands

  bool operator==(const HomologyGroup& o) const = default;
  std::string str() const;  // "0", "Z", "Z^2", "Z/2", "Z + Z/2 + Z/4"
};

// Integral simplicial homology H_0 .. H_dim.
std::vector<HomologyGroup> homology(const SimplicialComplex& K);
// Betti numbers over GF(2).
std::vector<std::size_t> homology_mod2(const SimplicialComplex& K);
std::string homology_string(const std::vector<HomologyGroup>& H);

// |degree| of a simplicial map between triangulated d-spheres (d >= 1), read off H_d of its mapping cone.
BigInt sphere_map_degree(const SimplicialComplex& S, const VertexMap& g, const SimplicialComplex& L, int d);

}  // namespace cwsimp
