#pragma once

#include <stdexcept>
#include <string>

namespace cwsimp {

enum class ErrorKind {
  InvalidInput,
  PreconditionViolation,
  DegenerateGeometry,
  GeometryViolation,
  UnsupportedDimension,
  NonTermination,
  Inconsistency,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// CLI exit code for an error kind: 2 invalid input, 3 non-termination, 4 everything else.
int exit_code(ErrorKind kind);

}  // namespace cwsimp
