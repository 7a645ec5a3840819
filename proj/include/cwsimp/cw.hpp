#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cwsimp/complex.hpp"

namespace cwsimp {

// A point of a CW complex: an open cell and coordinates in its open unit ball.
struct CWPoint {
  std::size_t cell = 0;
  Eigen::VectorXd coords;
};

struct CWCell {
  int dim = 0;
  std::string name;
  // Attaching map on the unit sphere S^{dim-1} in R^dim; lands in cells of smaller index.
  std::function<CWPoint(const Point&)> glue;
};

struct CWComplex {
  std::string name;
  std::vector<CWCell> cells;  // ordered so that every cell glues onto earlier ones
};

CWComplex cw_sphere(int d);          // one 0-cell and one d-cell
CWComplex cw_projective(int n);      // RP^n, cells of dimension 0..n
CWComplex cw_lens(int p, int q);     // L(p, q), cells of dimension 0..3
CWComplex cw_grassmannian_2_4();     // G(2,4), Schubert cells

// The RP^n cell structure viewed on representatives: x != 0 in R^{k+1} names a point of RP^k.
CWPoint rp_point(const Point& x);

// Split B^{n+m} -> B^n x B^m and its inverse, rescaling by |(x,y)| / max(|x|,|y|).
std::pair<Point, Point> homeoball_split(const Point& z, int n);
Point homeoball_join(const Point& x, const Point& y);

namespace grassmannian {

using Frame = Eigen::Matrix<double, 4, 2>;  // columns span a 2-plane in R^4
using Symbol = std::pair<int, int>;         // Schubert symbol (sigma1, sigma2), 1-based

// Cells ordered (1,2) (1,3) (2,3) (1,4) (2,4) (3,4).
const std::vector<Symbol>& symbols();
std::size_t cell_index(Symbol s);
int cell_dim(Symbol s);

Eigen::Matrix4d projection(const Frame& T);
Symbol schubert_symbol(const Frame& T, double tol = 1e-10);
// Orthonormal (v1, v2) with v1 in H^{sigma1}, v2 in H^{sigma2}, v1 ⊥ v2.
Frame echelon_frame(const Frame& T, Symbol s);

// Reflection R(v1, ·) taking v1^⊥ to s^⊥, s = e_{sigma1}; an involution.
Eigen::Vector4d reflect(const Eigen::Vector4d& v1, const Eigen::Vector4d& w, int sigma1);

// Characteristic map of the cell on the closed ball of dimension cell_dim(s), and its inverse on the open cell.
Frame characteristic(Symbol s, const Point& u);
Point inverse_characteristic(Symbol s, const Frame& T);

CWPoint canonical(const Frame& T);

}  // namespace grassmannian

}  // namespace cwsimp
