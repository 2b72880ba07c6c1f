#pragma once

#include <stdexcept>
#include <string>

namespace covreg {

/// Malformed input: files, configs, empty correspondence sets, size mismatches.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Base for failures of the numerical machinery (exit code 3 in the CLI).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Log map evaluated at (or numerically at) rotation angle pi.
class LogMapSingularity : public NumericalError {
 public:
  explicit LogMapSingularity(const std::string& what) : NumericalError(what) {}
};

class SingularCovariance : public NumericalError {
 public:
  explicit SingularCovariance(const std::string& what) : NumericalError(what) {}
};

class NonPdHessian : public NumericalError {
 public:
  explicit NonPdHessian(const std::string& what) : NumericalError(what) {}
};

}  // namespace covreg
