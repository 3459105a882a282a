#pragma once

#include <stdexcept>
#include <string>

namespace gridpeb {

/// Base for every error the library raises on bad caller input.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A vertex outside the grid, mismatched dimensions and similar shape errors.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A move whose endpoints are not adjacent or whose source lacks pebbles.
class IllegalMove : public Error {
public:
  using Error::Error;
};

/// The operation requires a solvable distribution. Carries the first vertex
/// (row-major) that is not reachable.
class Unsolvable : public Error {
public:
  Unsolvable(const std::string& what, int row, int col) : Error(what), row(row), col(col) {}
  int row;
  int col;
};

/// A search was asked to go beyond its configured pebble cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A precondition of a transform or LP reduction does not hold.
class PreconditionFailed : public Error {
public:
  using Error::Error;
};

/// Internal structural check failed. This signals a bug in the library, not
/// bad input.
class StructureViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace gridpeb
