#pragma once

#include <optional>
#include <vector>

#include "jacal/module.hpp"
#include "jacal/normalization.hpp"

namespace jacal {

/// Koszul complex on f_1..f_c over T. Basis of step i: i-subsets of
/// {1..c} in lexicographic order; maps[i-1] is d_i from step i to i-1.
struct KoszulComplex {
  QuotientRing ring;
  std::vector<Polynomial> sequence;
  std::vector<PolyMatrix> maps;
  /// Degrees of the basis elements of each step when the sequence is
  /// homogeneous.
  std::optional<std::vector<std::vector<int>>> twists;

  std::size_t rank(std::size_t i) const;
};

KoszulComplex koszul_complex(const QuotientRing& ring, const std::vector<Polynomial>& sequence);

/// H_i of the Koszul complex on `sequence` with coefficients in T.
Subquotient koszul_homology(const std::vector<Polynomial>& sequence, const QuotientRing& ring, std::size_t i);

/// Tor^A_i(R, R) = H_i(Koszul(theta(x) - theta(x')); k[x,x']/(I(x) + I(x'))).
/// With swap_factors the sequence is theta(x') - theta(x).
Subquotient tor_over_normalization(const NormalizationData& a, std::size_t i, bool swap_factors = false);

/// k[x,x']/(I(x) + I(x')) for R = k[x]/I.
QuotientRing doubled_quotient(const QuotientRing& ring, const DoubledRing& doubled);

}  // namespace jacal
