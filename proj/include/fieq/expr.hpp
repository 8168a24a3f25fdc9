#pragma once

#include <string_view>

#include "fieq/errors.hpp"
#include "fieq/implications.hpp"

namespace fieq {

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : InputError(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the implication expression grammar
///
///   expr := named:<id> | r(<tnorm>) | sn(<tconorm>,<neg>)
///         | ql(<tnorm>,<tconorm>,<neg>) | f(<gen>) | g(<gen>)
///         | nabla(<expr>,<expr>)
///
/// Unknown identifiers and trailing input are ParseErrors. A ql(...) that
/// fails the axioms parses to the bare QL-operation; composing it with nabla
/// throws ConstructionError.
Implication parse_implication(std::string_view text);

/// kBisectionTol when any node of the tree is bisection-backed, else kClosedFormTol.
double default_tolerance(const Implication& imp) noexcept;

}  // namespace fieq
