#pragma once

#include <stdexcept>
#include <string>

namespace dtk {

/// Caller supplied arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A document could not be parsed or violates its schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard (exact solver, enumeration, brute force) was exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph operation needed connectivity that the graph lacks.
class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(std::size_t vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

}  // namespace dtk
