#pragma once

#include <stdexcept>
#include <string>

namespace motzcyc {

// Base class for every error the library throws. Anything else escaping the
// public API is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Path text contains a character other than U/D/L (case-insensitive).
class InvalidCharacterError : public Error {
 public:
  InvalidCharacterError(int index, char character)
      : Error("invalid character '" + std::string(1, character) +
              "' at index " + std::to_string(index)),
        index_(index),
        character_(character) {}
  int index() const { return index_; }  // 1-based
  char character() const { return character_; }

 private:
  int index_;
  char character_;
};

// Step word is not a Motzkin path: it dips below the x-axis or does not end
// at height 0. index() points at the first offending step (1-based).
class NotAPathError : public Error {
 public:
  NotAPathError(int index, const std::string& reason)
      : Error("not a Motzkin path (step " + std::to_string(index) + "): " + reason),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// The all-level path L^n is excluded from the cyclic-descent machinery: its
// descent set is empty in every rotation, so no valid extension exists.
class AllLevelPathError : public Error {
 public:
  AllLevelPathError()
      : Error("the all-level path has no cyclic descent extension") {}
};

// A shape is malformed (rows not weakly decreasing, inner not contained in
// outer, ...).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// Operation requires a three-row strip shape (or another specific shape) and
// the argument does not have it.
class WrongShapeError : public Error {
 public:
  explicit WrongShapeError(const std::string& what) : Error(what) {}
};

// A tableau filling is not standard (entries not 1..n, or a row/column fails
// to increase).
class NotStandardError : public Error {
 public:
  explicit NotStandardError(const std::string& what) : Error(what) {}
};

// Tableau or shape text cannot be parsed.
class TableauParseError : public Error {
 public:
  explicit TableauParseError(const std::string& what) : Error(what) {}
};

// jdt slide was asked to start from a cell that is not an inner corner.
class NotAnInnerCornerError : public Error {
 public:
  explicit NotAnInnerCornerError(const std::string& what) : Error(what) {}
};

// Exact integer computation left the representable range.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// A verification suite was invoked on an empty family.
class DomainEmptyError : public Error {
 public:
  explicit DomainEmptyError(const std::string& what) : Error(what) {}
};

// An orbit walk failed to return to its start within the allowed number of
// steps (would indicate the shift map is not a bijection on the family).
class NonClosureError : public Error {
 public:
  explicit NonClosureError(const std::string& what) : Error(what) {}
};

}  // namespace motzcyc
