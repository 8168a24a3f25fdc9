#pragma once

#include <stdexcept>
#include <string>

namespace fieq {

// Bad parameters: grid sizes, tolerances, malformed tables.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the carrier of a map, e.g. x notin [0,1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An object could not be built because its operands fail their axioms.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownNameError : public std::invalid_argument {
 public:
  explicit UnknownNameError(const std::string& name)
      : std::invalid_argument("unknown identifier: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Exhaustive work requested beyond the supported size.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace fieq
