#pragma once

#include <utility>
#include <vector>

#include "cwsimp/complex.hpp"
#include "cwsimp/rng.hpp"

namespace cwsimp {

// Lk(ab) = Lk(a) ∩ Lk(b); ab must be an edge of K.
bool link_condition(const SimplicialComplex& K, VertexId a, VertexId b);

// Quotient identifying a and b with the new vertex c.
SimplicialComplex contract_edge(const SimplicialComplex& K, VertexId a, VertexId b, VertexId c);

struct ContractionStep {
  VertexId a, b, c;
};

struct ContractionResult {
  SimplicialComplex complex;
  VertexMap quotient;  // every vertex of the input -> its image
  std::vector<ContractionStep> trace;
};

enum class ContractionOrder {
  Random,
  // Experimental: always contract at the lowest-degree vertex that has a valid edge.
  GreedyLowDegree,
};

// Contracts edges satisfying the link condition until none is left.
ContractionResult contract_all(const SimplicialComplex& K, Rng& rng,
                               ContractionOrder order = ContractionOrder::Random);

}  // namespace cwsimp
