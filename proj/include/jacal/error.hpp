#pragma once

#include <stdexcept>
#include <string>

namespace jacal {

/// Raised for every contract violation of the algebra layer (ring mismatch,
/// index out of range, uncertified normalization, ...).
class AlgebraError : public std::runtime_error {
 public:
  enum class Kind {
    RingMismatch,
    OutOfRange,
    InvalidArgument,
    Uncertified,
    Unsupported,
    NotHomogeneous,
    Internal,
  };

  AlgebraError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace jacal
