#pragma once

#include <stdexcept>
#include <string>

namespace geomlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller handed in something malformed (slot out of range, bad dimension, unknown id).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Evaluating a field failed (non-finite output, domain violation).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// The metric is degenerate or has the wrong signature at the requested point.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A structure was refused because it does not satisfy its axioms.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace geomlab
