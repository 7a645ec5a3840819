#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cwsimp {

using VertexId = std::uint32_t;

// A simplex is its vertex set, kept sorted ascending without repeats.
using Simplex = std::vector<VertexId>;

inline Simplex make_simplex(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline Simplex make_simplex(std::initializer_list<VertexId> v) { return make_simplex(std::vector<VertexId>(v)); }

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (VertexId v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// True if a is a face of b (both sorted).
inline bool is_face(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Simplex without_vertex(const Simplex& s, std::size_t i) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) out.push_back(s[j]);
  return out;
}

inline bool contains_vertex(const Simplex& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

// Order used for every deterministic listing: by dimension, then lexicographic.
inline bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// All non-empty faces of s, s included.
std::vector<Simplex> all_faces(const Simplex& s);

}  // namespace cwsimp
