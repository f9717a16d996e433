#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

/// Base for every rejection of ill-formed input.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NonPositiveIndex : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class UnstableInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ZeroIdeal : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The ideal has rank < 2 over F_p[s], so its colength is infinite.
class RankDeficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated homology disagreed between two truncation orders.
class NotStabilized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace ribbon
