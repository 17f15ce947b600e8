#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace typegraph {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ESTree / JSON input. Carries the byte offset where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// A node type, property or edge name that is not in the shipped vocabularies.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

/// A runtime label outside the eight known classes.
class LabelError : public Error {
 public:
  using Error::Error;
};

/// Input data that is structurally valid but unusable (bad graph, empty split...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Tensor shapes that do not compose.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// API misuse, e.g. running backward on a tape twice.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configuration field outside its allowed range. `field()` names the field.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Non-finite loss or gradient during optimization.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint file that cannot be read or does not match the running vocabulary.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace typegraph
