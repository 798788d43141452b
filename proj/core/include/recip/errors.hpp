#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recip {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when the locus is not a line
/// (for example a JSON document that fails to parse as a whole).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what);

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

enum class ValidationKind {
  kLoop,
  kDuplicateEdge,
  kSharedColour,
  kUncolouredVertex,
  kUncolouredEdge,
  kVertexRange,
  kColourCount,
  kInvalidParameter,
};

const char* to_string(ValidationKind kind);

/// Well-formed input that violates a graph or parameter invariant.
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, const std::string& what);

  ValidationKind kind() const { return kind_; }

 private:
  ValidationKind kind_;
};

/// A configurable size or search cap was exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported class (e.g. a non-uniform pencil).
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch or other misuse of the algebra layer.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An invariant that should hold by construction did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace recip
