#include "cwsimp/cw.hpp"

#include <cmath>
#include <numeric>

#include "cwsimp/error.hpp"

namespace cwsimp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kZero = 1e-14;

CWPoint base_point() { return {0, Eigen::VectorXd(0)}; }

}  // namespace

CWComplex cw_sphere(int d) {
  if (d < 1) fail(ErrorKind::InvalidInput, "sphere dimension must be >= 1");
  CWComplex X;
  X.name = "S^" + std::to_string(d);
  X.cells.push_back({0, "e0", nullptr});
  X.cells.push_back({d, "e" + std::to_string(d), [](const Point&) { return base_point(); }});
  return X;
}

CWPoint rp_point(const Point& x) {
  const double r = x.norm();
  if (r == 0.0) fail(ErrorKind::PreconditionViolation, "zero vector names no projective point");
  Eigen::Index j = x.size() - 1;
  while (j > 0 && std::abs(x(j)) <= kZero * r) --j;
  if (j == 0) return base_point();
  const double sign = x(j) > 0 ? 1.0 : -1.0;
  return {static_cast<std::size_t>(j), Eigen::VectorXd(sign * x.head(j) / r)};
}

CWComplex cw_projective(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "projective dimension must be >= 1");
  CWComplex X;
  X.name = "RP^" + std::to_string(n);
  X.cells.push_back({0, "e0", nullptr});
  for (int k = 1; k <= n; ++k) X.cells.push_back({k, "e" + std::to_string(k), [](const Point& u) { return rp_point(u); }});
  return X;
}

namespace {

// Point of the 1-skeleton of the lens space at angle alpha of the quotient circle.
CWPoint lens_circle(double alpha) {
  alpha = std::fmod(alpha, kTwoPi);
  if (alpha < 0) alpha += kTwoPi;
  if (alpha < 1e-12 || kTwoPi - alpha < 1e-12) return base_point();
  Eigen::VectorXd s(1);
  s(0) = alpha / (kTwoPi / 2) - 1.0;
  return {1, s};
}

}  // namespace

CWComplex cw_lens(int p, int q) {
  if (p < 2 || q < 1 || std::gcd(p, q) != 1) fail(ErrorKind::InvalidInput, "lens space needs p >= 2, q >= 1, gcd(p, q) = 1");
  CWComplex X;
  X.name = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  X.cells.push_back({0, "e0", nullptr});
  X.cells.push_back({1, "e1", [](const Point&) { return base_point(); }});
  X.cells.push_back({2, "e2", [p](const Point& u) { return lens_circle(p * std::atan2(u(1), u(0))); }});
  const double angle = kTwoPi * q / p;
  X.cells.push_back({3, "e3", [p, angle](const Point& w) -> CWPoint {
                       if (std::abs(w(2)) <= 1e-12) return lens_circle(p * std::atan2(w(1), w(0)));
                       Eigen::VectorXd u(2);
                       if (w(2) < 0) {
                         u << w(0), w(1);
                       } else {
                         // Upper hemisphere: rotate by 2*pi*q/p, then drop to the 2-cell.
                         const double c = std::cos(angle), s = std::sin(angle);
                         u << c * w(0) - s * w(1), s * w(0) + c * w(1);
                       }
                       return {2, u};
                     }});
  return X;
}

std::pair<Point, Point> homeoball_split(const Point& z, int n) {
  if (n < 0 || n > z.size()) fail(ErrorKind::PreconditionViolation, "bad split");
  Point x = z.head(n), y = z.tail(z.size() - n);
  const double m = std::max(x.norm(), y.norm());
  if (m == 0.0) return {x, y};
  const double scale = z.norm() / m;
  return {scale * x, scale * y};
}

Point homeoball_join(const Point& x, const Point& y) {
  Point z(x.size() + y.size());
  z << x, y;
  const double r = z.norm();
  if (r == 0.0) return z;
  return std::max(x.norm(), y.norm()) / r * z;
}

namespace grassmannian {

const std::vector<Symbol>& symbols() {
  static const std::vector<Symbol> s{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
  return s;
}

std::size_t cell_index(Symbol s) {
  const auto& all = symbols();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == s) return i;
  fail(ErrorKind::InvalidInput, "not a Schubert symbol of G(2,4)");
}

int cell_dim(Symbol s) { return (s.first - 1) + (s.second - 2); }

namespace {

// sqrt(1 - r2), snapped to 0 on the boundary sphere so boundary points land in lower cells.
double completion(double r2) {
  const double c = 1.0 - r2;
  return c < 1e-12 ? 0.0 : std::sqrt(c);
}

Frame orthonormal(const Frame& T) {
  Eigen::HouseholderQR<Frame> qr(T);
  Frame Q = qr.householderQ() * Eigen::Matrix<double, 4, 2>::Identity();
  return Q;
}

int rank_of(const Eigen::MatrixXd& M, double tol) {
  if (M.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

}  // namespace

Eigen::Matrix4d projection(const Frame& T) {
  const Frame Q = orthonormal(T);
  return Q * Q.transpose();
}

Symbol schubert_symbol(const Frame& T, double tol) {
  const Frame Q = orthonormal(T);
  int s1 = 0, s2 = 0;
  for (int k = 1; k <= 4; ++k) {
    // dim(T ∩ R^k) = 2 - rank of the coordinates past k.
    const int dim = 2 - rank_of(Q.bottomRows(4 - k), tol);
    if (dim >= 1 && !s1) s1 = k;
    if (dim >= 2 && !s2) s2 = k;
  }
  return {s1, s2};
}

Frame echelon_frame(const Frame& T, Symbol s) {
  const Frame Q = orthonormal(T);
  const int i1 = s.first - 1, i2 = s.second - 1;
  Eigen::Vector2d c;
  if (s.first == 4) {
    c << 1, 0;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(Q.bottomRows(4 - s.first)), Eigen::ComputeFullV);
    c = svd.matrixV().col(1);
  }
  Eigen::Vector4d v1 = Q * c;
  Eigen::Vector2d cp(-c(1), c(0));
  Eigen::Vector4d v2 = Q * cp;
  for (int k = s.first; k < 4; ++k) v1(k) = 0.0;
  for (int k = s.second; k < 4; ++k) v2(k) = 0.0;
  v1.normalize();
  v2 -= v2.dot(v1) * v1;
  v2.normalize();
  if (v1(i1) < 0) v1 = -v1;
  if (v2(i2) < 0) v2 = -v2;
  Frame F;
  F << v1, v2;
  return F;
}

Eigen::Vector4d reflect(const Eigen::Vector4d& v1, const Eigen::Vector4d& w, int sigma1) {
  const int i = sigma1 - 1;
  Eigen::Vector4d a = v1;
  a(i) += 1.0;  // s + v1
  return w - (w.dot(a) / (1.0 + v1(i))) * a;
}

Frame characteristic(Symbol s, const Point& u) {
  const int n1 = s.first - 1, n2 = s.second - 2;
  if (u.size() != n1 + n2) fail(ErrorKind::PreconditionViolation, "coordinate dimension does not match the cell");
  auto [x, y] = homeoball_split(u, n1);
  Eigen::Vector4d xp = Eigen::Vector4d::Zero(), yp = Eigen::Vector4d::Zero();
  xp.head(n1) = x;
  xp(n1) = completion(x.squaredNorm());
  // y gets a zero inserted at position sigma1, then its completing coordinate at sigma2.
  for (int k = 0, src = 0; k < s.second - 1; ++k) yp(k) = (k == s.first - 1) ? 0.0 : y(src++);
  yp(s.second - 1) = completion(y.squaredNorm());
  xp.normalize();
  yp.normalize();
  Frame F;
  F << xp, reflect(xp, yp, s.first);
  return F;
}

Point inverse_characteristic(Symbol s, const Frame& T) {
  const Frame E = echelon_frame(T, s);
  const Eigen::Vector4d v1 = E.col(0), v2 = E.col(1);
  const int n1 = s.first - 1;
  Point x = v1.head(n1);
  const Eigen::Vector4d w = reflect(v1, v2, s.first);
  Point y(s.second - 2);
  for (int k = 0, dst = 0; k < s.second - 1; ++k)
    if (k != s.first - 1) y(dst++) = w(k);
  return homeoball_join(x, y);
}

CWPoint canonical(const Frame& T) {
  const Symbol s = schubert_symbol(T);
  return {cell_index(s), inverse_characteristic(s, T)};
}

}  // namespace grassmannian

CWComplex cw_grassmannian_2_4() {
  CWComplex X;
  X.name = "G(2,4)";
  for (const auto& s : grassmannian::symbols()) {
    const std::string name = "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
    if (grassmannian::cell_dim(s) == 0) {
      X.cells.push_back({0, name, nullptr});
      continue;
    }
    X.cells.push_back({grassmannian::cell_dim(s), name,
                       [s](const Point& u) { return grassmannian::canonical(grassmannian::characteristic(s, u)); }});
  }
  return X;
}

}  // namespace cwsimp
