#pragma once

#include <stdexcept>
#include <string>

namespace ccvms {

// Error taxonomy mirrored by the C API status codes.
enum class ErrorCode {
  Shape,        // operand descriptors or literal shapes disagree
  Contract,     // precondition violated by the caller
  Singular,     // inversion of a non-invertible element
  Convergence,  // iteration cap reached before tolerance
  Domain,       // point outside the space's point set
  Parse,        // scenario text rejected
  Consistency,  // a theorem's hypotheses held but its conclusion failed
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(ErrorCode::Shape, what) {}
};

struct ContractError : Error {
  explicit ContractError(const std::string& what) : Error(ErrorCode::Contract, what) {}
};

struct SingularityError : Error {
  explicit SingularityError(const std::string& what) : Error(ErrorCode::Singular, what) {}
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double residual)
      : Error(ErrorCode::Convergence, what), residual(residual) {}
  double residual;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::Parse, what + " (line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Thrown when a checker's hypotheses all hold yet the conclusion fails.
// The message carries the full per-point dump; the CLI maps this to exit code 2.
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& what) : Error(ErrorCode::Consistency, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace ccvms
