#include "cwsimp/contraction.hpp"

#include <algorithm>
#include <map>

#include "cwsimp/error.hpp"

namespace cwsimp {

namespace {

// Complex with per-vertex stars, supporting edge contraction in place.
class MutableComplex {
 public:
  explicit MutableComplex(const SimplicialComplex& K) : next_(K.next_vertex_id()) {
    for (int k = 0; k <= K.dimension(); ++k)
      for (const auto& s : K.bucket(k)) add(s);
  }

  bool has(const Simplex& s) const { return all_.count(s) > 0; }

  const SimplexSet& star(VertexId v) const { return stars_.at(v); }

  std::vector<VertexId> neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& s : star(v))
      if (s.size() == 2) out.push_back(s[0] == v ? s[1] : s[0]);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool link_condition(VertexId a, VertexId b) const {
    if (!has(make_simplex({a, b}))) return false;
    for (const auto& s : star(a)) {
      if (s.size() < 2 || contains_vertex(s, b)) continue;
      Simplex tb, tab;
      for (VertexId u : s)
        if (u != a) tb.push_back(u);
      tab = tb;
      tb.insert(std::upper_bound(tb.begin(), tb.end(), b), b);
      if (!has(tb)) continue;
      tab.insert(std::upper_bound(tab.begin(), tab.end(), b), b);
      tab.insert(std::upper_bound(tab.begin(), tab.end(), a), a);
      if (!has(tab)) return false;
    }
    return true;
  }

  VertexId contract(VertexId a, VertexId b) {
    const VertexId c = next_++;
    std::vector<Simplex> old;
    for (VertexId v : {a, b})
      for (const auto& s : star(v)) old.push_back(s);
    std::sort(old.begin(), old.end());
    old.erase(std::unique(old.begin(), old.end()), old.end());
    for (const auto& s : old) remove(s);
    for (const auto& s : old) {
      Simplex t;
      for (VertexId u : s) t.push_back(u == a || u == b ? c : u);
      t = make_simplex(std::move(t));
      if (!has(t)) add(t);
    }
    stars_.erase(a);
    stars_.erase(b);
    return c;
  }

  std::vector<Simplex> edges() const {
    std::vector<Simplex> out;
    for (const auto& s : all_)
      if (s.size() == 2) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
  }

  SimplicialComplex to_complex() const {
    SimplicialComplex K;
    for (const auto& s : all_) K.insert_closure(s);
    return K;
  }

  std::size_t degree(VertexId v) const { return neighbours(v).size(); }

 private:
  void add(const Simplex& s) {
    all_.insert(s);
    for (VertexId v : s) stars_[v].insert(s);
  }
  void remove(const Simplex& s) {
    all_.erase(s);
    for (VertexId v : s) stars_[v].erase(s);
  }

  SimplexSet all_;
  std::unordered_map<VertexId, SimplexSet> stars_;
  VertexId next_;
};

}  // namespace

bool link_condition(const SimplicialComplex& K, VertexId a, VertexId b) {
  if (!K.contains(make_simplex({a, b}))) fail(ErrorKind::PreconditionViolation, "not an edge");
  return MutableComplex(K).link_condition(a, b);
}

SimplicialComplex contract_edge(const SimplicialComplex& K, VertexId a, VertexId b, VertexId c) {
  if (!K.contains(make_simplex({a, b}))) fail(ErrorKind::PreconditionViolation, "not an edge");
  if (K.contains_vertex(c)) fail(ErrorKind::PreconditionViolation, "new vertex id already in use");
  if (!MutableComplex(K).link_condition(a, b)) fail(ErrorKind::PreconditionViolation, "edge violates the link condition");
  SimplicialComplex out;
  for (int k = K.dimension(); k >= 0; --k)
    for (const auto& s : K.bucket(k)) {
      Simplex t;
      for (VertexId u : s) t.push_back(u == a || u == b ? c : u);
      out.insert_closure(make_simplex(std::move(t)));
    }
  return out;
}

ContractionResult contract_all(const SimplicialComplex& K, Rng& rng, ContractionOrder order) {
  MutableComplex M(K);
  ContractionResult R;
  for (VertexId v : K.vertices()) R.quotient.map[v] = v;

  // Candidate edges in a swap-remove vector so random picks stay O(1).
  std::vector<Simplex> cand;
  std::unordered_map<Simplex, std::size_t, SimplexHash> pos;
  auto set = [&](const Simplex& e, bool on) {
    auto it = pos.find(e);
    if (on && it == pos.end()) {
      pos.emplace(e, cand.size());
      cand.push_back(e);
    } else if (!on && it != pos.end()) {
      const std::size_t i = it->second;
      pos.erase(it);
      if (i + 1 != cand.size()) {
        cand[i] = std::move(cand.back());
        pos[cand[i]] = i;
      }
      cand.pop_back();
    }
  };
  for (const auto& e : M.edges()) set(e, M.link_condition(e[0], e[1]));

  std::unordered_map<VertexId, VertexId> merged;  // contracted vertex -> replacement
  while (!cand.empty()) {
    Simplex e;
    if (order == ContractionOrder::Random) {
      e = cand[rng.index(cand.size())];
    } else {
      std::vector<Simplex> sorted = cand;
      std::sort(sorted.begin(), sorted.end());
      std::size_t bestDeg = SIZE_MAX;
      for (const auto& f : sorted) {
        const std::size_t d = std::min(M.degree(f[0]), M.degree(f[1]));
        if (d < bestDeg) {
          bestDeg = d;
          e = f;
        }
      }
    }
    const VertexId a = e[0], b = e[1];
    for (VertexId v : {a, b})
      for (VertexId u : M.neighbours(v)) set(make_simplex({v, u}), false);
    const VertexId c = M.contract(a, b);
    merged[a] = c;
    merged[b] = c;
    R.trace.push_back({a, b, c});
    // Only edges touching the closed star of c can change status.
    std::vector<VertexId> ring = M.neighbours(c);
    ring.push_back(c);
    for (VertexId u : ring)
      for (VertexId w : M.neighbours(u)) {
        const Simplex f = make_simplex({u, w});
        set(f, M.link_condition(f[0], f[1]));
      }
  }

  for (auto& [v, img] : R.quotient.map) {
    while (merged.count(img)) img = merged.at(img);
  }
  R.complex = M.to_complex();
  return R;
}

}  // namespace cwsimp
