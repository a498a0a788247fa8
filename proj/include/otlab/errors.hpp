#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace otlab {

// Invalid arguments, out-of-range parameters, malformed configs. CLI exit code 2.
class ParamError : public std::runtime_error {
 public:
  explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};

// Query outside the domain of definition (e.g. point not in the source polygon).
class DomainError : public ParamError {
 public:
  explicit DomainError(const std::string& msg) : ParamError(msg) {}
};

// Solver non-convergence or probe failure; carries the residual history when
// available. CLI exit code 3.
class SolveError : public std::runtime_error {
 public:
  explicit SolveError(const std::string& msg) : std::runtime_error(msg) {}
  SolveError(const std::string& msg, std::vector<double> residual_history)
      : std::runtime_error(msg), residuals(std::move(residual_history)) {}

  std::vector<double> residuals;
};

// Filesystem/serialization failures. CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace otlab
