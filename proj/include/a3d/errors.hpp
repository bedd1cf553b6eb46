#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a3d {

/// A caller violated an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient fields of characteristic two are not supported.
class CharacteristicTwoError : public PreconditionError {
 public:
  CharacteristicTwoError() : PreconditionError("characteristic 2 is not supported") {}
};

/// Operands live over different coefficient fields.
class FieldMismatchError : public PreconditionError {
 public:
  FieldMismatchError() : PreconditionError("operands over different coefficient fields") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// A search ran up to its cap without reaching a verdict.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace a3d
