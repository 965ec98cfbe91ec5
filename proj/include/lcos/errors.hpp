#pragma once

#include <stdexcept>
#include <string>

namespace lcos {

// Process exit codes shared by the library and the CLI.
enum class ExitCode : int {
  ok = 0,
  usage = 2,
  transport_failure = 10,
  incomplete_matrix = 11,
  scc_cap_exceeded = 12,
  verification_mismatch = 13,
  invalid_input = 14,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

// Endpoint unreachable, HTTP error status, malformed response body.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& message)
      : Error(ExitCode::transport_failure, message) {}
};

// A score cell was never populated (aborted run, truncated fixture).
class IncompleteMatrixError : public Error {
 public:
  explicit IncompleteMatrixError(const std::string& message)
      : Error(ExitCode::incomplete_matrix, message) {}
};

// A strongly connected component is larger than the exact solver accepts.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message)
      : Error(ExitCode::scc_cap_exceeded, message) {}
};

// --verify found a disagreement between the solver and the brute-force check.
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& message)
      : Error(ExitCode::verification_mismatch, message) {}
};

// Malformed input files, duplicate names, cyclic reference graphs, bad flags.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ExitCode::invalid_input, message) {}
};

}  // namespace lcos
