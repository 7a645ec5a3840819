#include "cwsimp/io.hpp"

#include <fstream>
#include <sstream>

#include "cwsimp/error.hpp"

namespace cwsimp {

SimplicialComplex read_simp(std::istream& in) {
  SimplicialComplex K;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    Simplex s;
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        if (tok.empty() || tok[0] == '-') throw std::invalid_argument(tok);
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || v > 0xFFFFFFFEul)
        fail(ErrorKind::InvalidInput, "line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
      if (!s.empty() && v <= s.back())
        fail(ErrorKind::InvalidInput, "line " + std::to_string(lineno) + ": ids must be strictly ascending");
      s.push_back(static_cast<VertexId>(v));
    }
    if (!s.empty()) K.insert_closure(s);
  }
  return K;
}

SimplicialComplex load_simp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  return read_simp(in);
}

void write_simp(std::ostream& out, const SimplicialComplex& K, const std::string& header) {
  if (!header.empty()) {
    std::istringstream hs(header);
    std::string line;
    while (std::getline(hs, line)) out << "# " << line << '\n';
  }
  auto maximal = K.maximal_simplices();
  std::sort(maximal.begin(), maximal.end());
  for (const auto& s : maximal) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

void save_simp(const std::string& path, const SimplicialComplex& K, const std::string& header) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path);
  write_simp(out, K, header);
}

}  // namespace cwsimp
