#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geomcore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (out-of-range vertex set,
// disconnected input to a metric predicate, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Well-defined request outside the supported subset (composite OA orders).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A combinatorial object failed its defining axioms. `witness` holds the
// indices that exhibit the violation (a point pair, a line pair, a point and
// a line, ...), in the order described by the message.
class ValidationError : public Error {
 public:
  ValidationError(std::string axiom, const std::string& what, std::vector<int> witness)
      : Error(axiom + ": " + what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<int> witness_;
};

// Parameters that do not evaluate to integers.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An enumeration hit its configured cap. Results are never silently truncated.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace geomcore
