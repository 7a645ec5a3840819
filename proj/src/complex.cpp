#include "cwsimp/complex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cwsimp/error.hpp"

namespace cwsimp {

std::vector<Simplex> all_faces(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t n = s.size();
  if (n > 20) fail(ErrorKind::UnsupportedDimension, "simplex too large");
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& simplices) {
  SimplicialComplex K;
  for (const auto& s : simplices) K.insert_closure(make_simplex(s));
  return K;
}

void SimplicialComplex::insert_closure(const Simplex& s) {
  if (s.empty()) return;
  const int d = simplex_dim(s);
  if (static_cast<int>(by_dim_.size()) <= d) by_dim_.resize(d + 1);
  if (by_dim_[d].count(s)) return;
  // Walk down: once a face is present, all of its faces are too.
  std::vector<Simplex> frontier{s};
  by_dim_[d].insert(s);
  ++total_;
  for (int k = d; k > 0 && !frontier.empty(); --k) {
    std::vector<Simplex> next;
    for (const auto& f : frontier)
      for (std::size_t i = 0; i < f.size(); ++i) {
        Simplex g = without_vertex(f, i);
        if (by_dim_[k - 1].insert(g).second) {
          ++total_;
          next.push_back(std::move(g));
        }
      }
    frontier = std::move(next);
  }
  next_id_ = std::max(next_id_, s.back() + 1);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const int d = simplex_dim(s);
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return false;
  return by_dim_[d].count(s) > 0;
}

bool SimplicialComplex::contains_vertex(VertexId v) const { return contains(Simplex{v}); }

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return 0;
  return by_dim_[k].size();
}

const SimplexSet& SimplicialComplex::bucket(int k) const {
  static const SimplexSet empty_set;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty_set;
  return by_dim_[k];
}

std::vector<VertexId> SimplicialComplex::vertices() const {
  std::vector<VertexId> out;
  for (const auto& s : bucket(0)) out.push_back(s[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  const auto& b = bucket(k);
  std::vector<Simplex> out(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::vector<Simplex> out;
  out.reserve(total_);
  for (int k = 0; k <= dimension(); ++k) {
    auto part = simplices_of_dim(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k) {
    SimplexSet covered;
    for (const auto& s : bucket(k + 1))
      for (std::size_t i = 0; i < s.size(); ++i) covered.insert(without_vertex(s, i));
    for (const auto& s : bucket(k))
      if (!covered.count(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), simplex_less);
  return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
  if (total_ != o.total_ || dimension() != o.dimension()) return false;
  for (int k = 0; k <= dimension(); ++k)
    if (by_dim_[k] != o.by_dim_[k]) return false;
  return true;
}

SimplexSet star(const SimplicialComplex& K, const Simplex& s) {
  SimplexSet out;
  for (int k = simplex_dim(s); k <= K.dimension(); ++k)
    for (const auto& t : K.bucket(k))
      if (is_face(s, t)) out.insert(t);
  return out;
}

SimplicialComplex closed_star(const SimplicialComplex& K, const Simplex& s) {
  SimplicialComplex out;
  for (int k = simplex_dim(s); k <= K.dimension(); ++k)
    for (const auto& t : K.bucket(k))
      if (is_face(s, t)) out.insert_closure(t);
  return out;
}

SimplicialComplex link(const SimplicialComplex& K, const Simplex& s) {
  SimplicialComplex out;
  for (int k = simplex_dim(s) + 1; k <= K.dimension(); ++k)
    for (const auto& t : K.bucket(k))
      if (is_face(s, t)) {
        Simplex rest;
        std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(rest));
        out.insert_closure(rest);
      }
  return out;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
  SimplicialComplex out;
  for (int j = std::min(k, K.dimension()); j >= 0; --j)
    for (const auto& s : K.bucket(j)) out.insert_closure(s);
  return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::vector<VertexId>& verts) {
  std::vector<VertexId> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  SimplicialComplex out;
  for (int k = K.dimension(); k >= 0; --k)
    for (const auto& s : K.bucket(k))
      if (std::includes(sorted.begin(), sorted.end(), s.begin(), s.end())) out.insert_closure(s);
  return out;
}

long euler_characteristic(const SimplicialComplex& K) {
  long chi = 0;
  for (int k = 0; k <= K.dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(K.count(k));
  return chi;
}

bool is_simplicial(const SimplexSet& simplices) {
  for (const auto& s : simplices) {
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      return false;
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!simplices.count(without_vertex(s, i))) return false;
  }
  return true;
}

Adjacency vertex_adjacency(const SimplicialComplex& K) {
  Adjacency adj;
  for (const auto& v : K.bucket(0)) adj[v[0]];
  for (const auto& e : K.bucket(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, n] : adj) std::sort(n.begin(), n.end());
  return adj;
}

std::vector<VertexId> closed_star_vertices(const Adjacency& adj, VertexId v) {
  std::vector<VertexId> out{v};
  auto it = adj.find(v);
  if (it != adj.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  std::sort(out.begin(), out.end());
  return out;
}

int GeometricComplex::ambient_dim() const {
  return coords.empty() ? 0 : static_cast<int>(coords.begin()->second.size());
}

const Point& GeometricComplex::at(VertexId v) const {
  auto it = coords.find(v);
  if (it == coords.end()) fail(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " has no coordinates");
  return it->second;
}

Eigen::MatrixXd GeometricComplex::points(const Simplex& s) const {
  Eigen::MatrixXd P(ambient_dim(), static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) P.col(static_cast<Eigen::Index>(i)) = at(s[i]);
  return P;
}

Point GeometricComplex::barycenter(const Simplex& s) const {
  Point c = Point::Zero(ambient_dim());
  for (VertexId v : s) c += at(v);
  return c / static_cast<double>(s.size());
}

double max_edge_length(const GeometricComplex& G) {
  double best = 0.0;
  for (const auto& e : G.complex.bucket(1)) best = std::max(best, (G.at(e[0]) - G.at(e[1])).norm());
  return best;
}

void validate(const GeometricComplex& G, double eps_rank) {
  const int n = G.ambient_dim();
  for (VertexId v : G.complex.vertices()) {
    const Point& p = G.at(v);
    if (p.size() != n) fail(ErrorKind::InvalidInput, "inconsistent coordinate dimension");
  }
  for (const auto& s : G.complex.maximal_simplices()) {
    if (s.size() < 2) continue;
    if (static_cast<int>(s.size()) - 1 > n) fail(ErrorKind::DegenerateGeometry, "simplex dimension exceeds ambient");
    Eigen::MatrixXd M(n, static_cast<Eigen::Index>(s.size() - 1));
    for (std::size_t i = 1; i < s.size(); ++i) M.col(static_cast<Eigen::Index>(i - 1)) = G.at(s[i]) - G.at(s[0]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= eps_rank * std::max(1.0, sv(0)))
      fail(ErrorKind::DegenerateGeometry, "affinely dependent simplex");
  }
}

VertexId VertexMap::operator()(VertexId v) const {
  auto it = map.find(v);
  if (it == map.end()) fail(ErrorKind::PreconditionViolation, "vertex map undefined at " + std::to_string(v));
  return it->second;
}

Simplex VertexMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back((*this)(v));
  return make_simplex(std::move(out));
}

VertexMap VertexMap::after(const VertexMap& first) const {
  VertexMap out;
  for (const auto& [k, v] : first.map) out.map[k] = (*this)(v);
  return out;
}

bool is_simplicial_map(const VertexMap& f, const SimplicialComplex& K, const SimplicialComplex& L) {
  for (int k = 0; k <= K.dimension(); ++k)
    for (const auto& s : K.bucket(k)) {
      for (VertexId v : s)
        if (!f.has(v)) return false;
      if (!L.contains(f.image(s))) return false;
    }
  return true;
}

}  // namespace cwsimp
