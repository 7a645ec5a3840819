#include "cwsimp/error.hpp"
#include "cwsimp/rng.hpp"

namespace cwsimp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::DegenerateGeometry: return "degenerate-geometry";
    case ErrorKind::GeometryViolation: return "geometry-violation";
    case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::NonTermination: return "non-termination";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::UnsupportedDimension:
      return 2;
    case ErrorKind::NonTermination: return 3;
    default: return 4;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace cwsimp
