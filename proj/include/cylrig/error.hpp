#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cylrig {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 lines, norm expressions, scripts).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog key.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// A point handed to a support-functional routine is not smooth.
class SmoothnessError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A framework has an edge whose displacement is not a smooth point.
class NotWellPositionedError : public PreconditionError {
 public:
  NotWellPositionedError(const std::string& what, int edge)
      : PreconditionError(what), edge_(edge) {}
  int edge() const noexcept { return edge_; }

 private:
  int edge_;
};

/// An independence oracle contradicted the matroid axioms during a search.
class MatroidAxiomError : public Error {
 public:
  using Error::Error;
};

}  // namespace cylrig
