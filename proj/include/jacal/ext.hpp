#pragma once

#include <string>
#include <vector>

#include "jacal/resolution.hpp"

namespace jacal {

/// Hom(F, N): position i is N^{rank F_i}; the map out of position i is the
/// transpose of d_{i+1} acting on N-coordinates, a block matrix with
/// rank(F_{i+1}) * g rows and rank(F_i) * g columns (g = generators of N).
struct HomComplex {
  QuotientRing ring;
  FPModule target;
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> maps;

  /// Maps with entries reduced modulo the relations of N when N is cyclic.
  std::vector<PolyMatrix> display_maps() const;
  std::string to_string() const;
};

HomComplex hom_complex(const FreeResolution& f, const FPModule& n);

/// Cohomology of Hom(F, N) at position n, for a resolution F of length at
/// least n + 1 (or complete).
Subquotient ext_from_resolution(const FreeResolution& f, std::size_t n, const FPModule& target);

/// Ext^n_R(M, N) as a subquotient of N^{rank F_n}.
Subquotient ext_module(const QuotientRing& ring, std::size_t n, const FPModule& m, const FPModule& target);

/// Kronecker product d^T ⊗ I_g.
PolyMatrix transpose_on_copies(const PolyMatrix& d, std::size_t g);
/// Block diagonal matrix with `count` copies of p.
PolyMatrix block_diagonal(const PolyMatrix& p, std::size_t count);

}  // namespace jacal
