#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacal/ideal.hpp"

namespace jacal {

/// A = k[t_1..t_d] -> R, t_j -> theta_j, with the certificate that R is a
/// finite A-module: in a Gröbner basis of I + (theta_j - t_j) for an order
/// eliminating x, every x_i has a pure power x_i^{m_i} as a leading term.
struct NormalizationData {
  QuotientRing ring;
  std::vector<Polynomial> theta;
  /// m_i per variable; 0 where no pure power was found.
  std::vector<int> pure_powers;
  /// First variable lacking a pure power, when uncertified.
  std::optional<std::string> failure;
  /// Remarks such as a theta count differing from dim R.
  std::vector<std::string> notes;

  bool certified() const { return !failure.has_value(); }
  std::size_t size() const { return theta.size(); }
  /// Throws AlgebraError(Uncertified) unless certified.
  void require_certified() const;
  std::string to_string() const;
};

/// k[x, x'] for a ring k[x]; the second copy of x_i is named x_i + "p"
/// (extended further if that name is taken).
struct DoubledRing {
  RingRef base;
  RingRef ring;
  /// Polynomial in the first (left) or second (right) copy of the variables.
  Polynomial left(const Polynomial& f) const;
  Polynomial right(const Polynomial& f) const;
  /// The multiplication map sending both copies to x.
  Polynomial multiply(const Polynomial& f) const;
};

DoubledRing double_variables(const RingRef& base);

NormalizationData normalization_check(const QuotientRing& ring, std::vector<Polynomial> theta);

}  // namespace jacal
