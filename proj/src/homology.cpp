#include "cwsimp/homology.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "cwsimp/cones.hpp"
#include "cwsimp/error.hpp"

namespace cwsimp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) fail(ErrorKind::PreconditionViolation, "matrix shape mismatch");
  IntMatrix out(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix M(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) M(i, j) = v;
  return M;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int k) {
  SparseIntMatrix B;
  const auto cols = K.simplices_of_dim(k);
  B.cols = cols.size();
  B.columns.resize(B.cols);
  if (k <= 0) {
    B.rows = 0;
    return B;
  }
  const auto rows = K.simplices_of_dim(k - 1);
  B.rows = rows.size();
  std::unordered_map<Simplex, std::uint32_t, SimplexHash> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], static_cast<std::uint32_t>(i));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = B.columns[j];
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      col.emplace_back(index.at(without_vertex(cols[j], i)), i % 2 == 0 ? 1 : -1);
    std::sort(col.begin(), col.end());
  }
  return B;
}

namespace {

void swap_rows(IntMatrix& A, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(a, j), A(b, j));
}
void swap_cols(IntMatrix& A, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < A.rows; ++i) std::swap(A(i, a), A(i, b));
}
// row_a += q * row_b
void add_row(IntMatrix& A, std::size_t a, std::size_t b, const BigInt& q) {
  for (std::size_t j = 0; j < A.cols; ++j)
    if (A(b, j) != 0) A(a, j) += q * A(b, j);
}
void add_col(IntMatrix& A, std::size_t a, std::size_t b, const BigInt& q) {
  for (std::size_t i = 0; i < A.rows; ++i)
    if (A(i, b) != 0) A(i, a) += q * A(i, b);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A, bool with_transforms) {
  SmithResult R;
  IntMatrix& D = R.D;
  D = A;
  if (with_transforms) {
    R.U = IntMatrix::identity(A.rows);
    R.V = IntMatrix::identity(A.cols);
  }
  auto rswap = [&](std::size_t a, std::size_t b) {
    swap_rows(D, a, b);
    if (with_transforms) swap_rows(R.U, a, b);
  };
  auto cswap = [&](std::size_t a, std::size_t b) {
    swap_cols(D, a, b);
    if (with_transforms) swap_cols(R.V, a, b);
  };
  auto radd = [&](std::size_t a, std::size_t b, const BigInt& q) {
    add_row(D, a, b, q);
    if (with_transforms) add_row(R.U, a, b, q);
  };
  auto cadd = [&](std::size_t a, std::size_t b, const BigInt& q) {
    add_col(D, a, b, q);
    if (with_transforms) add_col(R.V, a, b, q);
  };

  const std::size_t n = std::min(A.rows, A.cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    std::size_t pi = A.rows, pj = A.cols;
    for (std::size_t i = t; i < A.rows; ++i)
      for (std::size_t j = t; j < A.cols; ++j)
        if (D(i, j) != 0 && (pi == A.rows || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == A.rows) break;
    rswap(t, pi);
    cswap(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < A.rows; ++i)
        if (D(i, t) != 0) {
          radd(i, t, -BigInt(D(i, t) / D(t, t)));
          if (D(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < A.cols; ++j)
        if (D(t, j) != 0) {
          cadd(j, t, -BigInt(D(t, j) / D(t, t)));
          if (D(t, j) != 0) clean = false;
        }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t; move it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < A.rows; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < A.cols; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
        rswap(t, bi);
        cswap(t, bj);
        continue;
      }
      // Divisibility: the pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < A.rows && divides; ++i)
        for (std::size_t j = t + 1; j < A.cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            radd(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < A.cols; ++j) D(t, j) = -D(t, j);
      if (with_transforms)
        for (std::size_t j = 0; j < A.rows; ++j) R.U(t, j) = -R.U(t, j);
    }
    R.diagonal.push_back(D(t, t));
  }
  return R;
}

namespace {

struct Overflow {};

// Entry arithmetic for the sparse eliminator.
struct RingI64 {
  using T = std::int64_t;
  static bool unit(T a) { return a == 1 || a == -1; }
  // b - f * a
  static T submul(T b, T f, T a) {
    T p, r;
    if (__builtin_mul_overflow(f, a, &p) || __builtin_sub_overflow(b, p, &r)) throw Overflow{};
    return r;
  }
  static T factor(T b, T pivot) { return b * pivot; }  // pivot is a unit
};

struct RingBig {
  using T = BigInt;
  static bool unit(const T& a) { return a == 1 || a == -1; }
  static T submul(const T& b, const T& f, const T& a) { return b - f * a; }
  static T factor(const T& b, const T& pivot) { return b * pivot; }
};

struct RingGF2 {
  using T = std::int8_t;
  static bool unit(T a) { return a != 0; }
  static T submul(T b, T f, T a) { return static_cast<T>((b + f * a) & 1); }
  static T factor(T b, T) { return b; }
};

template <class Ring>
class SparseEliminator {
  using T = typename Ring::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

 public:
  // Works on the transpose: every column of A becomes a row here (invariant factors are unchanged).
  explicit SparseEliminator(const SparseIntMatrix& A) : rows_(A.cols), alive_(A.cols, 1), colRows_(A.rows) {
    for (std::size_t j = 0; j < A.cols; ++j) {
      for (auto [i, v] : A.columns[j]) {
        T x = static_cast<T>(v);
        if constexpr (std::is_same_v<Ring, RingGF2>) x = static_cast<T>(((v % 2) + 2) % 2);
        if (x != 0) {
          rows_[j].emplace_back(i, x);
          colRows_[i].push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
  }

  std::size_t eliminate() {
    std::size_t rank = 0;
    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    std::vector<std::size_t> queuedLen(rows_.size(), SIZE_MAX);
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) {
        queue.emplace(rows_[r].size(), r);
        queuedLen[r] = rows_[r].size();
      }
    while (!queue.empty()) {
      auto [len, r] = queue.top();
      queue.pop();
      if (!alive_[r] || queuedLen[r] != len) continue;
      queuedLen[r] = SIZE_MAX;
      if (rows_[r].empty()) continue;
      // Unit entry whose column is shortest keeps fill-in low.
      std::size_t best = SIZE_MAX, bestCost = SIZE_MAX;
      for (std::size_t k = 0; k < rows_[r].size(); ++k)
        if (Ring::unit(rows_[r][k].second) && colRows_[rows_[r][k].first].size() < bestCost) {
          bestCost = colRows_[rows_[r][k].first].size();
          best = k;
        }
      if (best == SIZE_MAX) continue;  // parked until the row changes
      const std::uint32_t c = rows_[r][best].first;
      const T pivot = rows_[r][best].second;
      std::vector<std::uint32_t> others = colRows_[c];
      std::sort(others.begin(), others.end());
      others.erase(std::unique(others.begin(), others.end()), others.end());
      for (std::uint32_t r2 : others) {
        if (r2 == r || !alive_[r2]) continue;
        const T* b = find(rows_[r2], c);
        if (!b) continue;
        const T f = Ring::factor(*b, pivot);
        axpy(r2, f, r);
        if (queuedLen[r2] != rows_[r2].size() && !rows_[r2].empty()) {
          queue.emplace(rows_[r2].size(), r2);
          queuedLen[r2] = rows_[r2].size();
        }
      }
      alive_[r] = 0;
      colRows_[c].clear();
      ++rank;
    }
    return rank;
  }

  // Remaining non-zero rows, with columns renumbered densely.
  IntMatrix leftover() const {
    std::vector<std::uint32_t> rs;
    std::vector<std::uint32_t> cs;
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      if (alive_[r] && !rows_[r].empty()) {
        rs.push_back(r);
        for (const auto& e : rows_[r]) cs.push_back(e.first);
      }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    IntMatrix M(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (const auto& [c, v] : rows_[rs[i]])
        M(i, static_cast<std::size_t>(std::lower_bound(cs.begin(), cs.end(), c) - cs.begin())) = BigInt(v);
    return M;
  }

 private:
  static const T* find(const Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  // rows_[dst] -= f * rows_[src]
  void axpy(std::uint32_t dst, const T& f, std::uint32_t src) {
    const Row& a = rows_[src];
    const Row& b = rows_[dst];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        T v = Ring::submul(T(0), f, a[i].second);
        if (v != 0) {
          out.emplace_back(a[i].first, v);
          colRows_[a[i].first].push_back(dst);
        }
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back(b[j]);
        ++j;
      } else {
        T v = Ring::submul(b[j].second, f, a[i].second);
        if (v != 0) out.emplace_back(b[j].first, v);
        ++i;
        ++j;
      }
    }
    rows_[dst] = std::move(out);
  }

  std::vector<Row> rows_;
  std::vector<char> alive_;
  std::vector<std::vector<std::uint32_t>> colRows_;
};

template <class Ring>
InvariantFactors factors_with(const SparseIntMatrix& A) {
  SparseEliminator<Ring> E(A);
  InvariantFactors out;
  out.rank = E.eliminate();
  const IntMatrix rest = E.leftover();
  if (rest.rows > 0 && rest.cols > 0)
    for (const BigInt& d : smith_normal_form(rest, false).diagonal) {
      ++out.rank;
      if (d > 1) out.torsion.push_back(d);
    }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace

InvariantFactors invariant_factors(const SparseIntMatrix& A) {
  try {
    return factors_with<RingI64>(A);
  } catch (const Overflow&) {
    return factors_with<RingBig>(A);
  }
}

std::size_t rank_mod2(const SparseIntMatrix& A) {
  SparseEliminator<RingGF2> E(A);
  return E.eliminate();
}

std::string HomologyGroup::str() const {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back("Z");
  else if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& K) {
  const int n = K.dimension();
  std::vector<InvariantFactors> f(n + 2);
  for (int k = 1; k <= n; ++k) f[k] = invariant_factors(boundary_matrix(K, k));
  std::vector<HomologyGroup> H(n + 1);
  for (int k = 0; k <= n; ++k) {
    H[k].betti = K.count(k) - f[k].rank - f[k + 1].rank;
    H[k].torsion = f[k + 1].torsion;
  }
  return H;
}

std::vector<std::size_t> homology_mod2(const SimplicialComplex& K) {
  const int n = K.dimension();
  std::vector<std::size_t> rank(n + 2, 0);
  for (int k = 1; k <= n; ++k) rank[k] = rank_mod2(boundary_matrix(K, k));
  std::vector<std::size_t> b(n + 1);
  for (int k = 0; k <= n; ++k) b[k] = K.count(k) - rank[k] - rank[k + 1];
  return b;
}

std::string homology_string(const std::vector<HomologyGroup>& H) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < H.size(); ++k) os << (k ? ", " : "") << H[k].str();
  os << ")";
  return os.str();
}

BigInt sphere_map_degree(const SimplicialComplex& S, const VertexMap& g, const SimplicialComplex& L, int d) {
  if (d < 1) fail(ErrorKind::UnsupportedDimension, "degree via the mapping cone needs d >= 1");
  const ConeResult C = mapping_cone(S, g, L);
  const auto H = homology(C.complex);
  if (static_cast<int>(H.size()) <= d) fail(ErrorKind::Inconsistency, "cone has no homology in degree d");
  const HomologyGroup& h = H[d];
  if (h.betti == 1 && h.torsion.empty()) return 0;
  if (h.betti == 0 && h.torsion.empty()) return 1;
  if (h.betti == 0 && h.torsion.size() == 1) return h.torsion[0];
  fail(ErrorKind::Inconsistency, "H_d of the mapping cone is not cyclic: " + h.str());
}

}  // namespace cwsimp
