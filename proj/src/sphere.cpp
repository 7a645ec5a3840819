#include "cwsimp/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "cwsimp/error.hpp"

namespace cwsimp {

SphereTriangulation standard_sphere(int d) {
  if (d < 0) fail(ErrorKind::InvalidInput, "sphere dimension must be >= 0");
  const int n = d + 1;
  const double nd = n;
  const double beta = std::sqrt(1.0 + 1.0 / nd);
  const double alpha = std::pow(nd, -1.5) * (1.0 - std::sqrt(nd + 1.0));
  SphereTriangulation S;
  S.dim = d;
  for (int i = 0; i <= d + 1; ++i) {
    Point x = Point::Constant(n, i <= d ? alpha : -1.0 / std::sqrt(nd));
    if (i <= d) x(i) += beta;
    S.geom.coords.emplace(static_cast<VertexId>(i), x);
    S.anchors.push_back(static_cast<VertexId>(i));
  }
  for (int skip = 0; skip <= d + 1; ++skip) {
    Simplex f;
    for (int i = 0; i <= d + 1; ++i)
      if (i != skip) f.push_back(static_cast<VertexId>(i));
    S.geom.complex.insert_closure(f);
  }
  return S;
}

void normalize_vertices(GeometricComplex& G) {
  for (auto& [v, p] : G.coords) {
    const double r = p.norm();
    if (r == 0.0) fail(ErrorKind::GeometryViolation, "vertex at the origin cannot be normalized");
    p /= r;
  }
}

double geodesic_distance(const Point& x, const Point& y) {
  return 2.0 * std::asin(std::min(1.0, (x - y).norm() / 2.0));
}

FacetLocator::FacetLocator(const GeometricComplex& G) {
  facets_ = G.complex.maximal_simplices();
  const int m = G.ambient_dim();
  inverse_.reserve(facets_.size());
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const Simplex& f = facets_[i];
    if (static_cast<int>(f.size()) != m)
      fail(ErrorKind::PreconditionViolation, "sphere facets must have ambient-dimension many vertices");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(G.points(f));
    // Flat facets (cocircular points on S^3 and up) cover no open set of directions and are never located.
    inverse_.push_back(lu.isInvertible() ? Eigen::MatrixXd(lu.inverse()) : Eigen::MatrixXd());
    for (VertexId v : f) incident_[v].push_back(i);
  }
}

const std::vector<std::size_t>& FacetLocator::incident(VertexId v) const {
  static const std::vector<std::size_t> none;
  auto it = incident_.find(v);
  return it == incident_.end() ? none : it->second;
}

std::optional<Eigen::VectorXd> FacetLocator::radial_weights(std::size_t i, const Point& x) const {
  if (inverse_[i].size() == 0) return std::nullopt;
  Eigen::VectorXd w = inverse_[i] * x;
  const double s = w.sum();
  if (!(s > 0.0)) return std::nullopt;
  return Eigen::VectorXd(w / s);
}

double FacetLocator::score(std::size_t i, const Point& x) const {
  if (inverse_[i].size() == 0) return -std::numeric_limits<double>::infinity();
  Eigen::VectorXd w = inverse_[i] * x;
  const double s = w.sum();
  if (!(s > 0.0)) return -std::numeric_limits<double>::infinity();
  return w.minCoeff() / s;
}

double FacetLocator::plane_radius(std::size_t i, const Point& x) const {
  if (inverse_[i].size() == 0) return std::numeric_limits<double>::infinity();
  const double s = (inverse_[i] * x).sum();
  if (!(s > 0.0)) return std::numeric_limits<double>::infinity();
  return x.norm() / s;
}

std::optional<std::size_t> FacetLocator::scan(const Point& x, double eps, std::size_t* tested) const {
  std::optional<std::size_t> best;
  double bestScore = -eps;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const double s = score(i, x);
    if (s >= bestScore) {
      bestScore = s;
      best = i;
    }
  }
  if (tested) *tested += facets_.size();
  return best;
}

Simplex FacetLocator::resolve(const Point& x, std::size_t seed, double eps, std::size_t* tested) const {
  Simplex out = facets_[seed];
  std::vector<std::size_t> ring;
  for (VertexId v : facets_[seed])
    for (std::size_t f : incident(v)) ring.push_back(f);
  std::sort(ring.begin(), ring.end());
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  for (std::size_t f : ring)
    if (f != seed && score(f, x) >= -eps) out = simplex_intersection(out, facets_[f]);
  if (tested) *tested += ring.size();
  if (out.empty()) {
    // Contradictory tolerances; fall back to the support of the weights in the seed facet.
    const Eigen::VectorXd w = *radial_weights(seed, x);
    for (std::size_t i = 0; i < facets_[seed].size(); ++i)
      if (w(static_cast<Eigen::Index>(i)) > eps) out.push_back(facets_[seed][i]);
  }
  return out;
}

Simplex FacetLocator::locate_naive(const Point& x, double eps) const {
  if (x.norm() == 0.0) fail(ErrorKind::GeometryViolation, "cannot locate the origin radially");
  std::optional<Simplex> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (score(i, x) >= -eps) out = out ? simplex_intersection(*out, facets_[i]) : facets_[i];
  if (!out) fail(ErrorKind::GeometryViolation, "ray meets no facet");
  return *out;
}

Simplex radial_location(const GeometricComplex& G, const Point& x, double eps) {
  return FacetLocator(G).locate_naive(x, eps);
}

LocationHierarchy::LocationHierarchy(const GeometricComplex& base, double eps) : eps_(eps) {
  levels_.push_back(std::make_shared<const FacetLocator>(base));
}

void LocationHierarchy::push_subdivision(const GeometricComplex& G,
                                         const std::unordered_map<Simplex, Simplex, SimplexHash>& parent_of) {
  auto next = std::make_shared<const FacetLocator>(G);
  const FacetLocator& prev = finest();
  std::unordered_map<Simplex, std::size_t, SimplexHash> index;
  for (std::size_t i = 0; i < prev.size(); ++i) index.emplace(prev.facet(i), i);
  std::vector<std::vector<std::size_t>> link(prev.size());
  for (std::size_t j = 0; j < next->size(); ++j) {
    auto pit = parent_of.find(next->facet(j));
    if (pit == parent_of.end()) fail(ErrorKind::PreconditionViolation, "facet without parent");
    link[index.at(pit->second)].push_back(j);
  }
  links_.push_back(std::move(link));
  levels_.push_back(std::move(next));
}

void LocationHierarchy::push_overlay(const GeometricComplex& G) {
  auto next = std::make_shared<const FacetLocator>(G);
  const std::size_t last = levels_.size() - 1;
  const FacetLocator& prev = finest();
  std::vector<std::vector<std::size_t>> link(prev.size());
  for (std::size_t j = 0; j < next->size(); ++j) {
    const Simplex& f = next->facet(j);
    const Eigen::MatrixXd P = G.points(f);
    const Eigen::Index k = P.cols();
    const Eigen::VectorXd c = P.rowwise().mean();
    std::vector<Point> samples{c};
    for (Eigen::Index i = 0; i < k; ++i) {
      samples.push_back(P.col(i));
      samples.push_back(0.6 * P.col(i) + 0.4 * c);
      for (Eigen::Index l = i + 1; l < k; ++l) samples.push_back(0.5 * (P.col(i) + P.col(l)));
    }
    for (const Point& s : samples) {
      const std::size_t seed = locate_facet_upto(s, last, nullptr);
      std::vector<std::size_t> ring;
      for (VertexId v : prev.facet(seed))
        for (std::size_t g : prev.incident(v)) ring.push_back(g);
      for (std::size_t g : ring)
        if (prev.score(g, s) >= -eps_) link[g].push_back(j);
    }
  }
  for (auto& l : link) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  links_.push_back(std::move(link));
  levels_.push_back(std::move(next));
}

std::size_t LocationHierarchy::locate_facet_upto(const Point& x, std::size_t last, LocateStats* stats) const {
  if (x.norm() == 0.0) fail(ErrorKind::GeometryViolation, "cannot locate the origin radially");
  std::size_t tested = 0;
  auto first = levels_[0]->scan(x, eps_, &tested);
  if (!first) fail(ErrorKind::GeometryViolation, "ray meets no facet of the coarsest level");
  std::size_t f = *first;
  for (std::size_t i = 1; i <= last; ++i) {
    const FacetLocator& L = *levels_[i];
    const auto& cand = links_[i - 1][f];
    std::optional<std::size_t> best;
    double bestScore = -eps_;
    auto consider = [&](std::size_t g) {
      const double s = L.score(g, x);
      ++tested;
      if (s >= bestScore) {
        bestScore = s;
        best = g;
      }
    };
    for (std::size_t g : cand) consider(g);
    if (!best) {
      if (stats) ++stats->fallbacks;
      std::vector<std::size_t> ring;
      for (std::size_t g : cand)
        for (VertexId v : L.facet(g))
          for (std::size_t h : L.incident(v)) ring.push_back(h);
      std::sort(ring.begin(), ring.end());
      ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
      for (std::size_t g : ring) consider(g);
    }
    if (!best) best = L.scan(x, eps_, &tested);
    if (!best) fail(ErrorKind::GeometryViolation, "ray meets no facet");
    f = *best;
  }
  if (stats) stats->facets_tested += tested;
  return f;
}

std::size_t LocationHierarchy::locate_facet(const Point& x, LocateStats* stats) const {
  return locate_facet_upto(x, levels_.size() - 1, stats);
}

Simplex LocationHierarchy::locate(const Point& x, LocateStats* stats) const {
  const std::size_t f = locate_facet(x, stats);
  std::size_t tested = 0;
  Simplex out = finest().resolve(x, f, eps_, &tested);
  if (stats) stats->facets_tested += tested;
  return out;
}

SphereTriangulation delaunay_on_sphere(const std::unordered_map<VertexId, Point>& points, int dim,
                                       const std::vector<VertexId>& anchors) {
  std::vector<VertexId> ids;
  ids.reserve(points.size());
  for (const auto& [v, p] : points) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  std::vector<Point> pts;
  std::vector<std::uint64_t> keys;
  for (VertexId v : ids) {
    const Point& p = points.at(v);
    if (p.size() != dim + 1) fail(ErrorKind::InvalidInput, "point dimension does not match the sphere");
    pts.push_back(p);
    keys.push_back(v);
  }
  SphereTriangulation S;
  S.dim = dim;
  S.anchors = anchors;
  S.geom.coords = points;
  for (const auto& f : convex_hull(pts, keys)) {
    Simplex s;
    for (std::size_t i : f) s.push_back(ids[i]);
    S.geom.complex.insert_closure(make_simplex(std::move(s)));
  }
  if (S.geom.complex.num_vertices() != ids.size())
    fail(ErrorKind::GeometryViolation, "some points are not hull vertices; are they on the unit sphere?");
  return S;
}

DelaunayStep delaunay_subdivide(const SphereTriangulation& S, SubdivisionMethod method, const SimplicialComplex* fixed) {
  SubdivisionResult R = fixed ? subdivide(S.geom, method, *fixed) : subdivide(S.geom, method);
  normalize_vertices(R.complex);
  DelaunayStep out;
  out.subdivision_vertices = R.complex.complex.num_vertices();
  out.sphere = delaunay_on_sphere(R.complex.coords, S.dim, S.anchors);
  return out;
}

namespace {

// Mutable facet list of a sphere triangulation supporting vertex removal.
class FacetMesh {
 public:
  FacetMesh(const SphereTriangulation& S) : coords_(S.geom.coords), m_(S.dim + 1) {
    for (const auto& f : S.geom.complex.maximal_simplices()) add(f);
  }

  std::vector<std::size_t> star(VertexId v) const {
    std::vector<std::size_t> out;
    auto it = inc_.find(v);
    if (it != inc_.end())
      for (std::size_t f : it->second)
        if (alive_[f]) out.push_back(f);
    return out;
  }

  std::vector<VertexId> closed_star_vertices(VertexId v) const {
    std::vector<VertexId> out;
    for (std::size_t f : star(v)) out.insert(out.end(), facets_[f].begin(), facets_[f].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Removes v and fills the hole with the Delaunay facets over its link.
  void remove(VertexId v) {
    const auto st = star(v);
    std::vector<Simplex> ridges;
    std::vector<VertexId> linkv;
    for (std::size_t f : st) {
      Simplex r;
      for (VertexId u : facets_[f])
        if (u != v) r.push_back(u);
      linkv.insert(linkv.end(), r.begin(), r.end());
      ridges.push_back(std::move(r));
    }
    std::sort(linkv.begin(), linkv.end());
    linkv.erase(std::unique(linkv.begin(), linkv.end()), linkv.end());

    std::vector<Simplex> fill = fill_hole(v, linkv);
    if (!closes(fill, ridges)) {
      rebuild_without(v);
      return;
    }
    for (std::size_t f : st) alive_[f] = 0;
    for (auto& f : fill) add(std::move(f));
    coords_.erase(v);
    inc_.erase(v);
  }

  SphereTriangulation result(const SphereTriangulation& S) const {
    SphereTriangulation out;
    out.dim = S.dim;
    out.anchors = S.anchors;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (alive_[i]) out.geom.complex.insert_closure(facets_[i]);
    for (VertexId v : out.geom.complex.vertices()) out.geom.coords.emplace(v, coords_.at(v));
    return out;
  }

 private:
  void add(Simplex f) {
    const std::size_t i = facets_.size();
    for (VertexId u : f) inc_[u].push_back(i);
    facets_.push_back(std::move(f));
    alive_.push_back(1);
  }

  std::vector<Simplex> fill_hole(VertexId v, const std::vector<VertexId>& linkv) const {
    if (static_cast<int>(linkv.size()) == m_) return {linkv};
    if (static_cast<int>(linkv.size()) < m_) return {};
    std::vector<Point> pts;
    std::vector<std::uint64_t> keys;
    for (VertexId u : linkv) {
      pts.push_back(coords_.at(u));
      keys.push_back(u);
    }
    std::vector<std::vector<std::size_t>> hull;
    try {
      hull = convex_hull(pts, keys);
    } catch (const Error&) {
      return {};
    }
    Point center = Point::Zero(m_);
    for (VertexId u : linkv) center += perturbed(coords_.at(u), u);
    center /= static_cast<double>(linkv.size());
    const Point pv = perturbed(coords_.at(v), v);
    std::vector<Simplex> out;
    for (const auto& f : hull) {
      Eigen::MatrixXd F(m_, m_);
      for (int i = 0; i < m_; ++i) F.col(i) = perturbed(coords_.at(linkv[f[i]]), linkv[f[i]]);
      Eigen::VectorXd n;
      double off;
      if (!hyperplane_through(F, n, off)) continue;
      const double sc = n.dot(center) - off, sv = n.dot(pv) - off;
      if (sc * sv < 0) {
        Simplex s;
        for (std::size_t i : f) s.push_back(linkv[i]);
        out.push_back(make_simplex(std::move(s)));
      }
    }
    return out;
  }

  // The fill must have exactly the link as boundary.
  static bool closes(const std::vector<Simplex>& fill, std::vector<Simplex> link) {
    if (fill.empty()) return false;
    std::map<Simplex, int> count;
    for (const auto& f : fill)
      for (std::size_t i = 0; i < f.size(); ++i) ++count[without_vertex(f, i)];
    std::vector<Simplex> boundary;
    for (const auto& [r, c] : count) {
      if (c > 2) return false;
      if (c == 1) boundary.push_back(r);
    }
    std::sort(link.begin(), link.end());
    return boundary == link;
  }

  void rebuild_without(VertexId v) {
    coords_.erase(v);
    std::vector<VertexId> ids;
    std::vector<Point> pts;
    std::vector<std::uint64_t> keys;
    for (const auto& [u, p] : coords_) ids.push_back(u);
    std::sort(ids.begin(), ids.end());
    for (VertexId u : ids) {
      pts.push_back(coords_.at(u));
      keys.push_back(u);
    }
    facets_.clear();
    alive_.clear();
    inc_.clear();
    for (const auto& f : convex_hull(pts, keys)) {
      Simplex s;
      for (std::size_t i : f) s.push_back(ids[i]);
      add(make_simplex(std::move(s)));
    }
  }

  std::unordered_map<VertexId, Point> coords_;
  int m_;
  std::vector<Simplex> facets_;
  std::vector<char> alive_;
  std::unordered_map<VertexId, std::vector<std::size_t>> inc_;
};

}  // namespace

SimplifyResult delaunay_simplify(const SphereTriangulation& S, const VertexMap& g, const SimplicialComplex& L,
                                 Rng& rng, const std::vector<VertexId>& protect) {
  if (S.dim < 1) return {S, g, 0};
  FacetMesh mesh(S);
  std::set<VertexId> frozen(S.anchors.begin(), S.anchors.end());
  frozen.insert(protect.begin(), protect.end());

  std::vector<VertexId> cand;
  std::unordered_map<VertexId, std::size_t> pos;
  auto eligible = [&](VertexId v) { return !frozen.count(v) && L.contains(g.image(mesh.closed_star_vertices(v))); };
  auto set_candidate = [&](VertexId v, bool on) {
    auto it = pos.find(v);
    if (on && it == pos.end()) {
      pos[v] = cand.size();
      cand.push_back(v);
    } else if (!on && it != pos.end()) {
      const std::size_t i = it->second;
      pos[cand.back()] = i;
      std::swap(cand[i], cand.back());
      cand.pop_back();
      pos.erase(v);
    }
  };
  for (VertexId v : S.geom.complex.vertices()) set_candidate(v, eligible(v));

  std::size_t removed = 0;
  while (!cand.empty()) {
    const VertexId v = cand[rng.index(cand.size())];
    std::vector<VertexId> nbrs = mesh.closed_star_vertices(v);
    set_candidate(v, false);
    mesh.remove(v);
    ++removed;
    for (VertexId u : nbrs)
      if (u != v) set_candidate(u, eligible(u));
  }

  SimplifyResult out;
  out.sphere = mesh.result(S);
  out.removed = removed;
  for (VertexId v : out.sphere.geom.complex.vertices()) out.map.map[v] = g(v);
  return out;
}

}  // namespace cwsimp
