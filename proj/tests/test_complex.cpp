#include <doctest.h>

#include <sstream>

#include "cwsimp/complex.hpp"
#include "cwsimp/error.hpp"
#include "cwsimp/io.hpp"
#include "fixtures.hpp"

using namespace cwsimp;

TEST_CASE("closure of a tetrahedron") {
  SimplicialComplex K;
  K.insert_closure({0, 1, 2, 3});
  CHECK(K.size() == 15);
  CHECK(K.count(0) == 4);
  CHECK(K.count(1) == 6);
  CHECK(K.count(2) == 4);
  CHECK(K.dimension() == 3);
  CHECK(K.maximal_simplices() == std::vector<Simplex>{{0, 1, 2, 3}});
  CHECK(euler_characteristic(K) == 1);
  CHECK(K.next_vertex_id() == 4);
}

TEST_CASE("boundary of the 3-simplex") {
  const auto K = fixtures::boundary_of_simplex(3);
  CHECK(euler_characteristic(K) == 2);
  CHECK(K.maximal_simplices().size() == 4);
  const auto L = link(K, {0});
  CHECK(L.count(0) == 3);
  CHECK(L.count(1) == 3);
  CHECK(L.count(2) == 0);
  CHECK(star(K, {0}).size() == 7);  // vertex, 3 edges, 3 triangles
  CHECK(closed_star(K, {0}).size() == 13);
  CHECK(link(K, {0, 1}).vertices() == std::vector<VertexId>{2, 3});
  CHECK(skeleton(K, 1).size() == 10);
}

TEST_CASE("simplicial set check") {
  SimplexSet s{{0}, {1}, {0, 1}};
  CHECK(is_simplicial(s));
  s.insert({0, 1, 2});
  CHECK_FALSE(is_simplicial(s));
}

TEST_CASE("adjacency and closed star vertices") {
  const auto K = fixtures::polygon(5);
  const auto adj = vertex_adjacency(K);
  CHECK(closed_star_vertices(adj, 0) == std::vector<VertexId>{0, 1, 4});
}

TEST_CASE("vertex maps") {
  const auto K = fixtures::polygon(6);
  const auto L = fixtures::polygon(3);
  VertexMap f;
  for (VertexId v = 0; v < 6; ++v) f.map[v] = v % 3;
  CHECK(is_simplicial_map(f, K, L));
  f.map[1] = 2;  // edge 01 -> 02 still an edge; edge 12 -> 22 is a vertex
  CHECK(is_simplicial_map(f, K, L));
  VertexMap g;
  for (VertexId v = 0; v < 6; ++v) g.map[v] = 0;
  CHECK(g.after(f)(4) == 0);
  CHECK_THROWS_AS(g(17), Error);
}

TEST_CASE("geometric complex validation") {
  GeometricComplex G;
  G.complex.insert_closure({0, 1, 2});
  G.coords[0] = Point::Zero(2);
  G.coords[1] = Point::Unit(2, 0);
  G.coords[2] = Point::Unit(2, 1);
  CHECK_NOTHROW(validate(G));
  CHECK(max_edge_length(G) == doctest::Approx(std::sqrt(2.0)));
  G.coords[2] = 2.0 * Point::Unit(2, 0);
  CHECK_THROWS_AS(validate(G), Error);
}

TEST_CASE(".simp round trip") {
  const auto K = fixtures::torus7();
  std::stringstream ss;
  write_simp(ss, K, "torus");
  const auto text = ss.str();
  CHECK(text.rfind("# torus\n", 0) == 0);
  const auto K2 = read_simp(ss);
  CHECK(K2 == K);
  std::stringstream again;
  write_simp(again, K2, "torus");
  CHECK(again.str() == text);
}

TEST_CASE(".simp parse errors") {
  std::stringstream bad1("0 1 x\n");
  CHECK_THROWS_AS(read_simp(bad1), Error);
  std::stringstream bad2("2 1\n");
  CHECK_THROWS_AS(read_simp(bad2), Error);
  std::stringstream ok("# comment\n0 1 2 # trailing\n\n2 3\n");
  const auto K = read_simp(ok);
  CHECK(K.maximal_simplices() == std::vector<Simplex>{{2, 3}, {0, 1, 2}});
  try {
    std::stringstream bad3("-1\n");
    read_simp(bad3);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    CHECK(exit_code(e.kind()) == 2);
  }
}
