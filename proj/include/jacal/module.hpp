#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacal/ideal.hpp"

namespace jacal {

/// M = coker(presentation) over R; the presentation has one row per
/// generator and one column per relation. Generator degrees are taken from
/// `twists` or inferred when every entry is homogeneous and consistent.
class FPModule {
 public:
  FPModule(QuotientRing ring, PolyMatrix presentation, std::optional<std::vector<int>> twists = {});

  static FPModule free(const QuotientRing& ring, std::size_t rank);
  /// R/J for J generated by `gens`.
  static FPModule cyclic(const QuotientRing& ring, const std::vector<Polynomial>& gens);
  /// The ideal J as a module, presented by the syzygies of its generators.
  static FPModule ideal(const QuotientRing& ring, const std::vector<Polynomial>& gens);

  const QuotientRing& ring() const { return ring_; }
  std::size_t generators() const { return presentation_.rows(); }
  const PolyMatrix& presentation() const { return presentation_; }
  /// Generator degrees; present iff the module is graded.
  const std::optional<std::vector<int>>& twists() const { return twists_; }
  bool is_homogeneous() const { return twists_.has_value() && ring_.is_homogeneous(); }

  const Submodule& relations() const { return *relations_; }
  bool is_zero() const;

  std::string to_string() const;

 private:
  QuotientRing ring_;
  PolyMatrix presentation_;
  std::optional<std::vector<int>> twists_;
  std::shared_ptr<const Submodule> relations_;
};

/// Row degrees making every column of m homogeneous, with the first row of
/// each connected block at degree `base`; nullopt if none exist.
std::optional<std::vector<int>> infer_row_twists(const PolyMatrix& m, const std::vector<int>& hint = {});

/// Degree of each column of m given row degrees; nullopt if some column is
/// not homogeneous. Zero columns get degree 0.
std::optional<std::vector<int>> column_degrees(const PolyMatrix& m, const std::vector<int>& row_twists);

/// K/B for submodules B ⊆ K of R^rank, given by spanning columns.
class Subquotient {
 public:
  /// Throws AlgebraError(Internal) unless span(B) ⊆ span(K).
  Subquotient(QuotientRing ring, PolyMatrix k, PolyMatrix b, std::optional<std::vector<int>> twists = {});

  const QuotientRing& ring() const { return ring_; }
  std::size_t rank() const { return k_.rows(); }
  const PolyMatrix& k() const { return k_; }
  const PolyMatrix& b() const { return b_; }
  const std::optional<std::vector<int>>& twists() const { return twists_; }
  const Submodule& boundary() const { return *boundary_; }

  bool is_zero() const;
  /// r * K ⊆ B.
  bool acts_zero(const Polynomial& r) const;
  /// Whether the class of `column` (an element of K) is zero.
  bool is_zero_class(const std::vector<Polynomial>& column) const;
  /// (B : K) as an ideal of R.
  Ideal annihilator() const;
  /// dim_k of the degree-d piece; requires twists and homogeneous data.
  std::size_t graded_dimension(int degree) const;

  std::string to_string() const;

 private:
  QuotientRing ring_;
  PolyMatrix k_, b_;
  std::optional<std::vector<int>> twists_;
  std::shared_ptr<const Submodule> cycles_;
  std::shared_ptr<const Submodule> boundary_;
};

bool acts_zero(const Polynomial& r, const Subquotient& e);
Ideal module_annihilator(const Subquotient& e);
/// Ann(M) for a finitely presented module.
Ideal module_annihilator(const FPModule& m);
/// M viewed as the subquotient R^g / relations.
Subquotient as_subquotient(const FPModule& m);

/// Number of monomials m*e_c of degree d (deg m + twist_c) outside the
/// leading terms of `gb`; the Hilbert function of its free module quotient.
std::size_t standard_monomial_count(const GroebnerBasis& gb, const std::vector<int>& twists, int degree);

/// Removes generators killed by a relation with a unit entry, by Gaussian
/// elimination on the presentation. Returns the pruned module.
FPModule prune_unit_pivots(const FPModule& m);

/// Indices of columns forming a minimal generating set of their span
/// modulo the defining ideal (columns taken in ascending degree; the
/// selection is minimal when the data are graded).
std::vector<std::size_t> minimal_columns(const QuotientRing& ring, const PolyMatrix& m,
                                         const std::optional<std::vector<int>>& row_twists);

}  // namespace jacal
