#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "cwsimp/error.hpp"
#include "cwsimp/subdivision.hpp"
#include "fixtures.hpp"

using namespace cwsimp;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// f-vector oracle: sd K has one vertex per simplex of K and (k+1)! top pieces per maximal k-simplex.
std::pair<std::size_t, std::size_t> bary_counts(const SimplicialComplex& K) {
  std::size_t top = 0;
  for (const auto& s : K.maximal_simplices()) top += static_cast<std::size_t>(factorial(static_cast<int>(s.size())));
  return {K.size(), top};
}

GeometricComplex standard_simplex(int d) {
  GeometricComplex G;
  Simplex s;
  for (int i = 0; i <= d; ++i) {
    s.push_back(static_cast<VertexId>(i));
    G.coords[static_cast<VertexId>(i)] = i == 0 ? Point(Point::Zero(d)) : Point(Point::Unit(d, i - 1));
  }
  G.complex.insert_closure(s);
  return G;
}

double volume(const GeometricComplex& G, const Simplex& s) {
  const int d = static_cast<int>(s.size()) - 1;
  Eigen::MatrixXd M(G.ambient_dim(), d);
  for (int i = 1; i <= d; ++i) M.col(i - 1) = G.at(s[static_cast<std::size_t>(i)]) - G.at(s[0]);
  return std::abs(M.determinant()) / static_cast<double>(factorial(d));
}

GeometricComplex abstract(const SimplicialComplex& K) { return GeometricComplex{K, {}}; }

}  // namespace

TEST_CASE("barycentric subdivision counts") {
  auto G = abstract(fixtures::boundary_of_simplex(3));
  auto R1 = barycentric_subdivide(G);
  CHECK(R1.complex.complex.num_vertices() == bary_counts(G.complex).first);
  CHECK(R1.complex.complex.maximal_simplices().size() == bary_counts(G.complex).second);
  CHECK(R1.complex.complex.num_vertices() == 14);
  auto R2 = barycentric_subdivide(R1.complex);
  CHECK(R2.complex.complex.num_vertices() == bary_counts(R1.complex.complex).first);
  CHECK(R2.complex.complex.num_vertices() == 74);
  CHECK(euler_characteristic(R2.complex.complex) == 2);
  // Old vertices keep their ids; parents are recorded.
  CHECK(R1.complex.complex.contains_vertex(0));
  for (const auto& s : R1.complex.complex.maximal_simplices()) CHECK(R1.parent_of.count(s) == 1);
}

TEST_CASE("edgewise subdivision counts") {
  auto G = abstract(fixtures::boundary_of_simplex(3));
  auto R1 = edgewise_subdivide(G);
  CHECK(R1.complex.complex.num_vertices() == 4 + 6);
  CHECK(R1.complex.complex.maximal_simplices().size() == 16);
  auto R2 = edgewise_subdivide(R1.complex);
  CHECK(R2.complex.complex.num_vertices() == 10 + R1.complex.complex.count(1));
  CHECK(R2.complex.complex.num_vertices() == 34);

  auto T = edgewise_subdivide(standard_simplex(3));
  CHECK(T.complex.complex.maximal_simplices().size() == 8);
  CHECK(T.complex.complex.num_vertices() == 10);
  CHECK_THROWS_AS(edgewise_subdivide(abstract(fixtures::boundary_of_simplex(5))), Error);
}

TEST_CASE("subdivisions tile the simplex") {
  for (int d : {1, 2, 3}) {
    const auto G = standard_simplex(d);
    const double vol = volume(G, G.complex.maximal_simplices()[0]);
    for (bool bary : {true, false}) {
      const auto R = bary ? barycentric_subdivide(G) : edgewise_subdivide(G);
      double sum = 0;
      for (const auto& s : R.complex.complex.maximal_simplices()) {
        const double v = volume(R.complex, s);
        CHECK(v > 1e-12);
        sum += v;
      }
      CHECK(sum == doctest::Approx(vol));
    }
  }
}

TEST_CASE("reparation tables tile the simplex and are hereditary") {
  for (int d : {1, 2, 3}) {
    const auto G = standard_simplex(d);
    const double vol = volume(G, G.complex.maximal_simplices()[0]);
    for (unsigned mask = 0; mask < (1u << (d + 1)); ++mask) {
      // Geometric tiling: piece volumes are positive and add up.
      double sum = 0;
      for (const auto& piece : reparation_pieces(d, mask)) {
        Eigen::MatrixXd M(d, d);
        auto pt = [&](LocalPoint lp) { return 0.5 * (G.at(static_cast<VertexId>(lp.first)) + G.at(static_cast<VertexId>(lp.second))); };
        for (int i = 1; i <= d; ++i) M.col(i - 1) = pt(piece[static_cast<std::size_t>(i)]) - pt(piece[0]);
        const double v = std::abs(M.determinant()) / static_cast<double>(factorial(d));
        CHECK(v > 1e-12);
        sum += v;
      }
      CHECK(sum == doctest::Approx(vol));

      // Heredity: restricting the pieces to a facet gives the facet's own row.
      for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> local;
        for (int i = 0; i <= d; ++i)
          if (i != skip) local.push_back(i);
        unsigned fmask = 0;
        for (std::size_t i = 0; i < local.size(); ++i)
          if (mask & (1u << local[i])) fmask |= 1u << i;
        auto relabel = [&](int i) { return local[static_cast<std::size_t>(i)]; };
        std::set<std::set<LocalPoint>> expect;
        for (const auto& piece : reparation_pieces(d - 1, fmask)) {
          std::set<LocalPoint> s;
          for (auto [a, b] : piece) s.insert({relabel(a), relabel(b)});
          expect.insert(s);
        }
        std::set<std::set<LocalPoint>> got;
        for (const auto& piece : reparation_pieces(d, mask)) {
          std::set<LocalPoint> face;
          for (auto p : piece)
            if (p.first != skip && p.second != skip) face.insert(p);
          if (static_cast<int>(face.size()) == d) got.insert(face);
        }
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("generalized subdivisions with nothing fixed equal the global ones") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto K = fixtures::random_complex(rng);
    const auto G = abstract(K);
    CHECK(generalized_barycentric(G, {}).complex.complex == barycentric_subdivide(G).complex.complex);
    CHECK(generalized_edgewise(G, {}).complex.complex == edgewise_subdivide(G).complex.complex);
  }
}

TEST_CASE("generalized barycentric keeps the fixed subcomplex") {
  GeometricComplex G;
  G.complex = SimplicialComplex::from_maximal({{0, 1, 2}, {1, 2, 3}});
  SimplicialComplex fixed;
  fixed.insert_closure({0, 1, 2});
  const auto R = generalized_barycentric(G, fixed);
  const auto top = R.complex.complex.maximal_simplices();
  CHECK(std::count(top.begin(), top.end(), Simplex{0, 1, 2}) == 1);
  // The free triangle becomes five: the shared edge stays whole, its two free edges are halved.
  CHECK(top.size() == 6);
  CHECK(R.complex.complex.num_vertices() == 4 + 3);
}

TEST_CASE("generalized edgewise from failing vertices") {
  const auto K = fixtures::boundary_of_simplex(3);
  const auto fixed = unsatisfied_subcomplex(K, {0});
  CHECK(fixed.maximal_simplices() == std::vector<Simplex>{{1, 2, 3}});
  const auto R = generalized_edgewise(abstract(K), fixed);
  CHECK(R.complex.complex.num_vertices() == 7);
  CHECK(R.complex.complex.maximal_simplices().size() == 1 + 3 * 3);
  CHECK(euler_characteristic(R.complex.complex) == 2);

  // All vertices failing gives the global edgewise subdivision.
  const auto all = unsatisfied_subcomplex(K, K.vertices());
  CHECK(all.empty());
  CHECK(generalized_edgewise(abstract(K), all).complex.complex == edgewise_subdivide(abstract(K)).complex.complex);

  // A cut pattern not induced by vertices is rejected.
  SimplicialComplex tri = SimplicialComplex::from_maximal({{0, 1, 2}});
  SimplicialComplex held = SimplicialComplex::from_maximal({{0, 2}, {1, 2}});
  CHECK_THROWS_AS(generalized_edgewise(abstract(tri), held), Error);
}

TEST_CASE("generalized subdivisions are geometric subdivisions") {
  Rng rng(9);
  const auto G = standard_simplex(3);
  GeometricComplex two;  // two tetrahedra sharing a face
  two.complex = SimplicialComplex::from_maximal({{0, 1, 2, 3}, {1, 2, 3, 4}});
  two.coords = G.coords;
  two.coords[4] = Point::Ones(3);
  const double vol = volume(two, {0, 1, 2, 3}) + volume(two, {1, 2, 3, 4});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<VertexId> failing;
    for (VertexId v = 0; v < 5; ++v)
      if (rng.index(2)) failing.push_back(v);
    const auto fixed = unsatisfied_subcomplex(two.complex, failing);
    for (bool bary : {true, false}) {
      const auto R = bary ? generalized_barycentric(two, fixed) : generalized_edgewise(two, fixed);
      double sum = 0;
      for (const auto& s : R.complex.complex.maximal_simplices()) sum += volume(R.complex, s);
      CHECK(sum == doctest::Approx(vol));
      CHECK(euler_characteristic(R.complex.complex) == 1);
      for (const auto& s : fixed.maximal_simplices()) CHECK(R.complex.complex.contains(s));
    }
  }
}

TEST_CASE("new vertex ids follow sorted parent order") {
  const auto R = barycentric_subdivide(abstract(SimplicialComplex::from_maximal({{0, 1, 2}})));
  CHECK(R.carrier.at(3) == Simplex{0, 1});
  CHECK(R.carrier.at(4) == Simplex{0, 2});
  CHECK(R.carrier.at(5) == Simplex{1, 2});
  CHECK(R.carrier.at(6) == Simplex{0, 1, 2});
}
