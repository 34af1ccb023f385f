#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclift {

// Malformed polynomial text. offset is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(std::size_t offset, const std::string& name)
      : ParseError(offset, "unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// A fraction whose denominator lies in the prime it is localized at.
class InvalidFraction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// eps_invert on an element whose constant slot is not a unit.
class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotRegularSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the shapes the engine knows how to handle. Raised instead
// of guessing (multiplicity of non-generating bases, boundary numerators
// that are not unit * extra^k, ...).
class UnsupportedShape : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cyclift
