#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cglab {

/// An operation was called outside its domain (bad parameter range,
/// n below the stability threshold, d = 0 where a bound needs d >= 1).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input was expected to have a single central character (pure even V,
/// pure odd W) and did not.
class ParityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The Young-order hypotheses W >=_Y V^- and V >=_Y W^- fail.
class ConditionsNotMetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed representation literal; position is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cglab
