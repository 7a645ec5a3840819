#include "cwsimp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cwsimp/error.hpp"
#include "cwsimp/rng.hpp"

namespace cwsimp {

Barycentric barycentric_coordinates(const Eigen::MatrixXd& P, const Point& x, double eps_rank) {
  const Eigen::Index k = P.cols();
  if (k == 0) fail(ErrorKind::PreconditionViolation, "empty simplex");
  if (x.size() != P.rows()) fail(ErrorKind::PreconditionViolation, "dimension mismatch");
  Barycentric out;
  out.weights = Eigen::VectorXd::Zero(k);
  if (k == 1) {
    out.weights(0) = 1.0;
    out.residual = (x - P.col(0)).norm();
    return out;
  }
  Eigen::MatrixXd D(P.rows(), k - 1);
  for (Eigen::Index i = 1; i < k; ++i) D.col(i - 1) = P.col(i) - P.col(0);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(D);
  qr.setThreshold(eps_rank);
  if (qr.rank() < k - 1) fail(ErrorKind::DegenerateGeometry, "affinely dependent simplex");
  const Eigen::VectorXd rhs = x - P.col(0);
  const Eigen::VectorXd mu = qr.solve(rhs);
  out.weights.tail(k - 1) = mu;
  out.weights(0) = 1.0 - mu.sum();
  out.residual = (D * mu - rhs).norm();
  return out;
}

bool point_in_simplex(const Eigen::MatrixXd& P, const Point& x, const Tolerances& tol) {
  const Barycentric b = barycentric_coordinates(P, x, tol.eps_rank);
  return b.residual <= tol.eps_aff && b.weights.minCoeff() >= -tol.eps;
}

bool hyperplane_through(const Eigen::MatrixXd& F, Eigen::VectorXd& n, double& off) {
  const Eigen::Index m = F.rows();
  if (m == 1) {
    n = Eigen::VectorXd::Ones(1);
    off = F(0, 0);
    return true;
  }
  Eigen::MatrixXd D(m, m - 1);
  for (Eigen::Index i = 1; i < m; ++i) D.col(i - 1) = F.col(i) - F.col(0);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(D);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(m, m);
  n = Q.col(m - 1);
  // Degenerate when the ridge directions do not span a hyperplane.
  const Eigen::MatrixXd R = qr.matrixQR().topRows(m - 1).triangularView<Eigen::Upper>();
  double minDiag = INFINITY, maxDiag = 0;
  for (Eigen::Index i = 0; i < m - 1; ++i) {
    minDiag = std::min(minDiag, std::abs(R(i, i)));
    maxDiag = std::max(maxDiag, std::abs(R(i, i)));
  }
  off = n.dot(F.col(0));
  return minDiag > 1e-14 * std::max(1.0, maxDiag);
}

std::optional<RayHit> ray_facet_intersection(const Point& dir, const Eigen::MatrixXd& facet, double eps) {
  if (facet.rows() != facet.cols() || dir.size() != facet.rows())
    fail(ErrorKind::PreconditionViolation, "facet must have m vertices in R^m");
  Eigen::VectorXd n;
  double off;
  if (!hyperplane_through(facet, n, off)) fail(ErrorKind::DegenerateGeometry, "degenerate facet");
  const double denom = n.dot(dir);
  if (std::abs(denom) <= eps * dir.norm()) return std::nullopt;
  const double t = off / denom;
  if (t <= eps) return std::nullopt;
  return RayHit{t, t * dir};
}

Point perturbed(const Point& p, std::size_t index, double magnitude) {
  Point q = p;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const std::uint64_t h = splitmix64(index * 0x1000193ULL + static_cast<std::uint64_t>(j) * 0x9E3779B1ULL + 17);
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
    q(j) += magnitude * (2.0 * u - 1.0);
  }
  return q;
}

namespace {

struct HullFacet {
  std::vector<int> v;   // point indices
  std::vector<int> nb;  // nb[i] lies across the ridge opposite v[i]
  Eigen::VectorXd n;
  double off = 0;
  std::vector<int> outside;
  bool alive = true;
  int mark = -1;
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Hull {
 public:
  explicit Hull(std::vector<Point> q) : Q_(std::move(q)), m_(static_cast<int>(Q_[0].size())) {}

  double side(const HullFacet& f, int p) const { return f.n.dot(Q_[p]) - f.off; }

  int make_facet(std::vector<int> verts) {
    HullFacet f;
    Eigen::MatrixXd F(m_, m_);
    for (int i = 0; i < m_; ++i) F.col(i) = Q_[verts[i]];
    if (!hyperplane_through(F, f.n, f.off)) fail(ErrorKind::DegenerateGeometry, "hull facet is degenerate");
    if (f.n.dot(center_) - f.off > 0) {
      f.n = -f.n;
      f.off = -f.off;
    }
    f.v = std::move(verts);
    f.nb.assign(m_, -1);
    facets_.push_back(std::move(f));
    return static_cast<int>(facets_.size()) - 1;
  }

  std::vector<int> initial_simplex() const {
    const int n = static_cast<int>(Q_.size());
    std::vector<int> chosen{0};
    Eigen::MatrixXd basis(m_, 0);
    while (static_cast<int>(chosen.size()) < m_ + 1) {
      int best = -1;
      double bestDist = 0;
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd r = Q_[i] - Q_[chosen[0]];
        if (basis.cols() > 0) r -= basis * (basis.transpose() * r);
        const double d = r.norm();
        if (d > bestDist) {
          bestDist = d;
          best = i;
        }
      }
      if (best < 0 || bestDist < 1e-12) fail(ErrorKind::DegenerateGeometry, "points do not span the ambient space");
      Eigen::VectorXd r = Q_[best] - Q_[chosen[0]];
      if (basis.cols() > 0) r -= basis * (basis.transpose() * r);
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = r.normalized();
      chosen.push_back(best);
    }
    return chosen;
  }

  std::vector<std::vector<std::size_t>> run(std::uint64_t seed) {
    const int n = static_cast<int>(Q_.size());
    const std::vector<int> init = initial_simplex();
    center_ = Eigen::VectorXd::Zero(m_);
    for (int i : init) center_ += Q_[i];
    center_ /= static_cast<double>(init.size());

    for (int i = 0; i <= m_; ++i) {
      std::vector<int> verts;
      for (int j = 0; j <= m_; ++j)
        if (j != i) verts.push_back(init[j]);
      make_facet(verts);
    }
    // Facet i omits init[i]; across its ridge opposite init[j] lies facet j.
    for (int i = 0; i <= m_; ++i) {
      HullFacet& f = facets_[i];
      for (int k = 0; k < m_; ++k) {
        const int j = static_cast<int>(std::find(init.begin(), init.end(), f.v[k]) - init.begin());
        f.nb[k] = j;
      }
    }

    std::vector<char> used(n, 0);
    for (int i : init) used[i] = 1;
    conflict_.assign(n, -1);
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
      if (!used[i]) order.push_back(i);
    Rng rng(seed ^ 0x5bd1e995ULL);
    rng.shuffle(order);
    for (int p : order)
      for (int f = 0; f <= m_; ++f)
        if (side(facets_[f], p) > 0) {
          facets_[f].outside.push_back(p);
          conflict_[p] = f;
          break;
        }

    for (int p : order)
      if (conflict_[p] >= 0) insert(p);

    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : facets_)
      if (f.alive) {
        std::vector<std::size_t> s(f.v.begin(), f.v.end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void insert(int p) {
    const int f0 = conflict_[p];
    std::vector<int> visible{f0};
    facets_[f0].mark = p;
    std::vector<std::pair<int, int>> horizon;
    for (std::size_t head = 0; head < visible.size(); ++head) {
      const int f = visible[head];
      for (int k = 0; k < m_; ++k) {
        const int g = facets_[f].nb[k];
        if (facets_[g].mark == p) continue;
        if (side(facets_[g], p) > 0) {
          facets_[g].mark = p;
          visible.push_back(g);
        } else {
          horizon.emplace_back(f, k);
        }
      }
    }

    std::vector<int> created;
    std::unordered_map<std::vector<int>, std::pair<int, int>, VecHash> ridges;
    for (auto [f, k] : horizon) {
      std::vector<int> verts = facets_[f].v;
      verts[k] = p;
      const int g = facets_[f].nb[k];
      const int h = make_facet(verts);
      created.push_back(h);
      facets_[h].nb[k] = g;
      auto& gnb = facets_[g].nb;
      *std::find(gnb.begin(), gnb.end(), f) = h;
      for (int j = 0; j < m_; ++j) {
        if (j == k) continue;
        std::vector<int> key;
        for (int i = 0; i < m_; ++i)
          if (i != j) key.push_back(facets_[h].v[i]);
        std::sort(key.begin(), key.end());
        auto [it, fresh] = ridges.try_emplace(std::move(key), h, j);
        if (!fresh) {
          facets_[h].nb[j] = it->second.first;
          facets_[it->second.first].nb[it->second.second] = h;
          ridges.erase(it);
        }
      }
    }
    if (!ridges.empty()) fail(ErrorKind::Internal, "convex hull horizon is not a closed ridge cycle");

    std::vector<int> orphans;
    for (int f : visible) {
      facets_[f].alive = false;
      for (int q : facets_[f].outside)
        if (q != p) orphans.push_back(q);
      facets_[f].outside.clear();
      facets_[f].outside.shrink_to_fit();
    }
    conflict_[p] = -1;
    for (int q : orphans) {
      conflict_[q] = -1;
      for (int h : created)
        if (side(facets_[h], q) > 0) {
          conflict_[q] = h;
          break;
        }
      if (conflict_[q] < 0)
        for (int h = 0; h < static_cast<int>(facets_.size()); ++h)
          if (facets_[h].alive && side(facets_[h], q) > 0) {
            conflict_[q] = h;
            break;
          }
      if (conflict_[q] >= 0) facets_[conflict_[q]].outside.push_back(q);
    }
  }

  std::vector<Point> Q_;
  int m_;
  Eigen::VectorXd center_;
  std::vector<HullFacet> facets_;
  std::vector<int> conflict_;
};

}  // namespace

std::vector<std::vector<std::size_t>> convex_hull(const std::vector<Point>& points, std::uint64_t seed) {
  std::vector<std::uint64_t> keys(points.size());
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = i;
  return convex_hull(points, keys, seed);
}

std::vector<std::vector<std::size_t>> convex_hull(const std::vector<Point>& points,
                                                  const std::vector<std::uint64_t>& keys, std::uint64_t seed) {
  if (keys.size() != points.size()) fail(ErrorKind::PreconditionViolation, "one key per point");
  if (points.empty()) fail(ErrorKind::PreconditionViolation, "no points");
  const int m = static_cast<int>(points[0].size());
  if (m < 1 || m > 6) fail(ErrorKind::UnsupportedDimension, "hull dimension must be 1..6");
  if (static_cast<int>(points.size()) < m + 1) fail(ErrorKind::DegenerateGeometry, "too few points for a hull");
  std::vector<Point> q;
  q.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != m) fail(ErrorKind::InvalidInput, "mixed point dimensions");
    q.push_back(perturbed(points[i], keys[i]));
  }
  if (m == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (q[i](0) < q[lo](0)) lo = i;
      if (q[i](0) > q[hi](0)) hi = i;
    }
    std::vector<std::vector<std::size_t>> out{{lo}, {hi}};
    std::sort(out.begin(), out.end());
    return out;
  }
  Hull hull(std::move(q));
  return hull.run(seed);
}

}  // namespace cwsimp
