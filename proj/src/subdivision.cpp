#include "cwsimp/subdivision.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "cwsimp/error.hpp"

namespace cwsimp {

SubdivisionMethod parse_subdivision_method(const std::string& s) {
  if (s == "bary" || s == "barycentric") return SubdivisionMethod::Barycentric;
  if (s == "edge" || s == "edgewise") return SubdivisionMethod::Edgewise;
  fail(ErrorKind::InvalidInput, "unknown subdivision method '" + s + "'");
}

namespace {

// Vertices of s listed in the given order.
std::vector<VertexId> ordered(const Simplex& s, const VertexOrder* order) {
  std::vector<VertexId> out = s;
  if (order)
    std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) { return order->at(a) < order->at(b); });
  return out;
}

bool has_coords(const GeometricComplex& G) { return !G.coords.empty(); }

void add_piece(SubdivisionResult& R, Simplex piece, const Simplex& parent) {
  piece = make_simplex(std::move(piece));
  R.complex.complex.insert_closure(piece);
  R.parent_of.emplace(std::move(piece), parent);
}

// Fresh ids for the given parent simplices, in sorted parent order, with coordinates at their barycenters.
std::unordered_map<Simplex, VertexId, SimplexHash> allocate(const GeometricComplex& G, std::vector<Simplex> parents,
                                                            SubdivisionResult& R) {
  std::sort(parents.begin(), parents.end(), simplex_less);
  std::unordered_map<Simplex, VertexId, SimplexHash> ids;
  VertexId next = G.complex.next_vertex_id();
  for (const auto& s : parents) {
    ids.emplace(s, next);
    R.carrier.emplace(next, s);
    if (has_coords(G)) R.complex.coords.emplace(next, G.barycenter(s));
    ++next;
  }
  for (VertexId v : G.complex.vertices()) {
    R.carrier.emplace(v, Simplex{v});
    if (has_coords(G)) R.complex.coords.emplace(v, G.at(v));
  }
  return ids;
}

}  // namespace

SubdivisionResult barycentric_subdivide(const GeometricComplex& G) {
  SubdivisionResult R;
  std::vector<Simplex> parents;
  for (int k = 1; k <= G.complex.dimension(); ++k)
    for (const auto& s : G.complex.bucket(k)) parents.push_back(s);
  const auto ids = allocate(G, parents, R);
  auto id_of = [&](const Simplex& s) { return s.size() == 1 ? s[0] : ids.at(s); };

  // Maximal simplices of the subdivision are the maximal flags of faces.
  for (const auto& sigma : G.complex.maximal_simplices()) {
    std::vector<VertexId> perm = sigma;
    do {
      Simplex chain;
      Simplex prefix;
      for (VertexId v : perm) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(id_of(prefix));
      }
      add_piece(R, std::move(chain), sigma);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return R;
}

SubdivisionResult generalized_barycentric(const GeometricComplex& G, const SimplicialComplex& fixed) {
  SubdivisionResult R;
  std::vector<Simplex> parents;
  for (int k = 1; k <= G.complex.dimension(); ++k)
    for (const auto& s : G.complex.bucket(k))
      if (!fixed.contains(s)) parents.push_back(s);
  const auto ids = allocate(G, parents, R);

  // sub[s]: top-dimensional pieces covering s, built upward one dimension at a time.
  std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> sub;
  for (int k = 0; k <= G.complex.dimension(); ++k) {
    for (const auto& s : G.complex.simplices_of_dim(k)) {
      if (k == 0 || fixed.contains(s)) {
        sub[s] = {s};
        continue;
      }
      const VertexId b = ids.at(s);
      std::vector<Simplex> pieces;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (const auto& eta : sub.at(without_vertex(s, i))) {
          Simplex p = eta;
          p.push_back(b);
          pieces.push_back(make_simplex(std::move(p)));
        }
      sub[s] = std::move(pieces);
    }
  }
  for (const auto& sigma : G.complex.maximal_simplices())
    for (const auto& p : sub.at(sigma)) add_piece(R, p, sigma);
  return R;
}

namespace {

std::vector<Simplex> all_edges(const SimplicialComplex& K) {
  const auto& b = K.bucket(1);
  return std::vector<Simplex>(b.begin(), b.end());
}

}  // namespace

SubdivisionResult edgewise_subdivide(const GeometricComplex& G, const VertexOrder* order) {
  if (G.complex.dimension() > 3) fail(ErrorKind::UnsupportedDimension, "edgewise subdivision needs dimension <= 3");
  SubdivisionResult R;
  const auto ids = allocate(G, all_edges(G.complex), R);
  for (const auto& sigma : G.complex.maximal_simplices()) {
    const auto v = ordered(sigma, order);
    auto m = [&](int i, int j) { return ids.at(make_simplex({v[i], v[j]})); };
    switch (sigma.size()) {
      case 1: add_piece(R, sigma, sigma); break;
      case 2:
        add_piece(R, {v[0], m(0, 1)}, sigma);
        add_piece(R, {m(0, 1), v[1]}, sigma);
        break;
      case 3:
        add_piece(R, {v[0], m(0, 1), m(0, 2)}, sigma);
        add_piece(R, {v[1], m(0, 1), m(1, 2)}, sigma);
        add_piece(R, {v[2], m(0, 2), m(1, 2)}, sigma);
        add_piece(R, {m(0, 1), m(0, 2), m(1, 2)}, sigma);
        break;
      case 4:
        for (int c = 0; c < 4; ++c) {
          Simplex corner{v[c]};
          for (int o = 0; o < 4; ++o)
            if (o != c) corner.push_back(m(std::min(c, o), std::max(c, o)));
          add_piece(R, corner, sigma);
        }
        // Octahedron split along the diagonal m03-m12; its four neighbours around that diagonal.
        add_piece(R, {m(0, 3), m(1, 2), m(0, 1), m(0, 2)}, sigma);
        add_piece(R, {m(0, 3), m(1, 2), m(0, 2), m(2, 3)}, sigma);
        add_piece(R, {m(0, 3), m(1, 2), m(2, 3), m(1, 3)}, sigma);
        add_piece(R, {m(0, 3), m(1, 2), m(1, 3), m(0, 1)}, sigma);
        break;
    }
  }
  return R;
}

namespace {

LocalPiece parse_piece(const std::string& text) {
  LocalPiece out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() == 1) out.emplace_back(tok[0] - '0', tok[0] - '0');
    else out.emplace_back(tok[0] - '0', tok[1] - '0');
  }
  return out;
}

std::vector<LocalPiece> parse_row(std::initializer_list<const char*> pieces) {
  std::vector<LocalPiece> out;
  for (const char* p : pieces) out.push_back(parse_piece(p));
  return out;
}

struct Tables {
  std::array<std::vector<LocalPiece>, 4> d1;
  std::array<std::vector<LocalPiece>, 8> d2;
  std::array<std::vector<LocalPiece>, 16> d3;

  Tables() {
    d1[0] = parse_row({"0,1"});
    d1[1] = d1[2] = d1[3] = parse_row({"0,01", "01,1"});

    d2[0] = parse_row({"0,1,2"});
    d2[1] = parse_row({"0,01,02", "01,1,2", "01,02,2"});
    d2[2] = parse_row({"01,1,12", "01,12,2", "0,01,2"});
    d2[4] = parse_row({"02,1,12", "0,02,1", "02,12,2"});
    d2[3] = d2[5] = d2[6] = d2[7] = parse_row({"01,1,12", "0,01,02", "02,12,2", "01,02,12"});

    d3[0] = parse_row({"0,1,2,3"});
    d3[1] = parse_row({"01,02,03,3", "0,01,02,03", "01,1,2,3", "01,02,2,3"});
    d3[2] = parse_row({"0,01,2,3", "01,12,13,3", "01,1,12,13", "01,12,2,3"});
    d3[4] = parse_row({"0,02,1,3", "02,1,12,3", "02,12,23,3", "02,12,2,23"});
    d3[8] = parse_row({"03,13,23,3", "03,1,13,2", "03,13,2,23", "0,03,1,2"});
    d3[3] = parse_row({"01,03,12,13", "02,03,12,3", "0,01,02,03", "01,02,03,12", "03,12,13,3", "02,12,2,3",
                       "01,1,12,13"});
    d3[5] = parse_row({"01,03,12,3", "03,12,23,3", "0,01,02,03", "01,02,03,12", "02,03,12,23", "01,1,12,3",
                       "02,12,2,23"});
    d3[9] = parse_row({"0,01,02,03", "01,02,03,23", "03,13,23,3", "01,1,13,2", "01,03,13,23", "01,13,2,23",
                       "01,02,2,23"});
    d3[6] = parse_row({"01,12,13,23", "01,02,23,3", "01,13,23,3", "0,01,02,3", "01,02,12,23", "01,1,12,13",
                       "02,12,2,23"});
    d3[10] = parse_row({"03,13,23,3", "01,03,12,13", "03,12,2,23", "0,01,03,2", "01,03,12,2", "01,1,12,13",
                        "03,12,13,23"});
    d3[12] = parse_row({"03,13,23,3", "0,02,03,1", "02,03,12,23", "03,1,12,13", "03,12,13,23", "02,03,1,12",
                        "02,12,2,23"});
    const auto global = parse_row({"03,13,23,3", "01,03,12,13", "0,01,02,03", "01,02,03,12", "02,03,12,23",
                                   "01,1,12,13", "03,12,13,23", "02,12,2,23"});
    for (unsigned mask : {7u, 11u, 13u, 14u, 15u}) d3[mask] = global;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::vector<LocalPiece>& reparation_pieces(int d, unsigned vmask) {
  const Tables& t = tables();
  static const std::vector<LocalPiece> point{{{0, 0}}};
  switch (d) {
    case 0: return point;
    case 1: return t.d1.at(vmask & 3u);
    case 2: return t.d2.at(vmask & 7u);
    case 3: return t.d3.at(vmask & 15u);
  }
  fail(ErrorKind::UnsupportedDimension, "reparation tables cover dimension <= 3");
}

SubdivisionResult generalized_edgewise(const GeometricComplex& G, const SimplicialComplex& fixed,
                                       const VertexOrder* order) {
  if (G.complex.dimension() > 3) fail(ErrorKind::UnsupportedDimension, "edgewise subdivision needs dimension <= 3");
  SubdivisionResult R;
  std::vector<Simplex> cut;
  for (const auto& e : G.complex.bucket(1))
    if (!fixed.contains(e)) cut.push_back(e);
  const auto ids = allocate(G, cut, R);

  for (const auto& sigma : G.complex.maximal_simplices()) {
    if (fixed.contains(sigma)) {
      add_piece(R, sigma, sigma);
      continue;
    }
    const auto v = ordered(sigma, order);
    const int n = static_cast<int>(v.size());
    auto edge_cut = [&](int i, int j) { return ids.count(make_simplex({v[i], v[j]})) > 0; };
    // Failing local vertices: those whose every incident edge in sigma is cut.
    unsigned vmask = 0;
    for (int i = 0; i < n; ++i) {
      bool all = n > 1;
      for (int j = 0; j < n; ++j)
        if (j != i && !edge_cut(i, j)) all = false;
      if (all) vmask |= 1u << i;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (edge_cut(i, j) != (((vmask >> i) & 1u) || ((vmask >> j) & 1u)))
          fail(ErrorKind::Internal, "cut edges of a simplex are not induced by a vertex set");
    for (const auto& piece : reparation_pieces(n - 1, vmask)) {
      Simplex s;
      for (auto [i, j] : piece) s.push_back(i == j ? v[i] : ids.at(make_simplex({v[i], v[j]})));
      add_piece(R, std::move(s), sigma);
    }
  }
  return R;
}

SubdivisionResult subdivide(const GeometricComplex& G, SubdivisionMethod method) {
  return method == SubdivisionMethod::Barycentric ? barycentric_subdivide(G) : edgewise_subdivide(G);
}

SubdivisionResult subdivide(const GeometricComplex& G, SubdivisionMethod method, const SimplicialComplex& fixed) {
  return method == SubdivisionMethod::Barycentric ? generalized_barycentric(G, fixed) : generalized_edgewise(G, fixed);
}

SimplicialComplex unsatisfied_subcomplex(const SimplicialComplex& K, const std::vector<VertexId>& failing) {
  std::vector<VertexId> keep;
  std::vector<VertexId> bad = failing;
  std::sort(bad.begin(), bad.end());
  for (VertexId v : K.vertices())
    if (!std::binary_search(bad.begin(), bad.end(), v)) keep.push_back(v);
  return induced_subcomplex(K, keep);
}

}  // namespace cwsimp
