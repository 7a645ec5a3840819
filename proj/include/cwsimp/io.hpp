#pragma once

#include <iosfwd>
#include <string>

#include "cwsimp/complex.hpp"

namespace cwsimp {

// .simp text format: one maximal simplex per line as ascending vertex ids, '#' starts a comment.
SimplicialComplex read_simp(std::istream& in);
SimplicialComplex load_simp(const std::string& path);
void write_simp(std::ostream& out, const SimplicialComplex& K, const std::string& header = "");
void save_simp(const std::string& path, const SimplicialComplex& K, const std::string& header = "");

}  // namespace cwsimp
