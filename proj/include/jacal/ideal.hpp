#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jacal/groebner.hpp"
#include "jacal/matrix.hpp"

namespace jacal {

/// R = k[x]/I. The reduced Gröbner basis of I and the Krull dimension are
/// computed at construction. Cheap to copy; copies share state.
class QuotientRing {
 public:
  explicit QuotientRing(RingRef ambient, std::vector<Polynomial> defining = {});

  const RingRef& ambient() const;
  std::size_t nvars() const { return ambient()->nvars(); }
  const Field& field() const { return ambient()->field(); }
  /// Generators as declared.
  const std::vector<Polynomial>& defining_generators() const;
  /// Reduced Gröbner basis of I.
  const std::vector<Polynomial>& defining_basis() const;
  const GroebnerBasis& defining_groebner() const;

  bool is_polynomial_ring() const { return defining_basis().empty(); }
  bool is_homogeneous() const;
  /// Krull dimension; nullopt when I is the unit ideal (empty spectrum).
  std::optional<int> dimension() const;

  /// Normal form modulo I.
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient(), i); }
  Polynomial constant(long c) const { return Polynomial::constant(ambient(), c); }

  /// Warnings such as a defining exponent divisible by the characteristic.
  std::vector<std::string> characteristic_notes() const;

  std::string to_string() const;

  friend bool operator==(const QuotientRing& a, const QuotientRing& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

void require_same_ring(const QuotientRing& a, const QuotientRing& b);

/// Ideal of a QuotientRing, stored through its lift J + I to the ambient
/// ring, whose reduced Gröbner basis is computed at construction.
class Ideal {
 public:
  Ideal(QuotientRing ring, std::vector<Polynomial> generators);

  static Ideal unit(const QuotientRing& ring) { return Ideal(ring, {ring.constant(1)}); }
  static Ideal zero(const QuotientRing& ring) { return Ideal(ring, {}); }

  const QuotientRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// Reduced Gröbner basis of the lift J + I (monic, descending leads).
  const std::vector<Polynomial>& basis() const { return *basis_polys_; }
  const GroebnerBasis& groebner() const { return gb_; }
  /// Lifted generators J + I.
  std::vector<Polynomial> lifted_generators() const;

  /// Display form: basis elements of the lift that are nonzero in R,
  /// reduced modulo I, without repetition. Empty for the zero ideal.
  std::vector<Polynomial> canonical_generators() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const { return gb_.is_whole_module(); }
  bool is_zero() const;

  /// `(x, y, z^4)`, `(0)` or `(1)`.
  std::string to_string() const;

 private:
  QuotientRing ring_;
  std::vector<Polynomial> generators_;
  GroebnerBasis gb_;
  std::shared_ptr<const std::vector<Polynomial>> basis_polys_;
};

/// Submodule of R^rank spanned by columns, with the Gröbner basis of its
/// lift (columns + I * unit vectors) in the ambient free module.
class Submodule {
 public:
  Submodule(QuotientRing ring, std::size_t rank, std::vector<std::vector<Polynomial>> columns);
  static Submodule from_matrix(const QuotientRing& ring, const PolyMatrix& m);

  const QuotientRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<std::vector<Polynomial>>& columns() const { return columns_; }
  const GroebnerBasis& groebner() const { return gb_; }

  std::vector<Polynomial> normal_form(const std::vector<Polynomial>& column) const;
  bool contains(const std::vector<Polynomial>& column) const;
  bool contains(const Submodule& other) const;
  /// Every column of m lies in the submodule.
  bool contains_columns(const PolyMatrix& m) const;

 private:
  QuotientRing ring_;
  std::size_t rank_;
  std::vector<std::vector<Polynomial>> columns_;
  GroebnerBasis gb_;
};

/// Reduced Gröbner basis of the ideal generated by gens, for `order`.
/// The result lives in a copy of the generators' ring carrying that order.
Ideal buchberger(const std::vector<Polynomial>& gens, MonomialOrder order);

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

/// Columns generating all relations among the columns of m over `ring`.
/// Over a quotient, relations are computed in the ambient ring against
/// m | I*e_k and the extra coordinates are projected away.
PolyMatrix syzygies(const PolyMatrix& m, const QuotientRing& ring);

/// J ∩ k[keep]. J must live in a polynomial ring (no defining ideal).
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep);
/// Elimination on bare generators, for internal use on lifted ideals.
std::vector<Polynomial> eliminate_generators(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& keep);

Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const std::vector<Ideal>& ideals);
/// (J : f) = (J ∩ (f)) / f.
Ideal ideal_colon(const Ideal& j, const Polynomial& f);
/// (J : K) as the intersection of (J : k) over generators of K.
Ideal ideal_colon(const Ideal& j, const Ideal& k);

/// f ∈ √J, via 1 ∈ J + (1 - t f).
bool radical_member(const Polynomial& f, const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int s);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Krull dimension of k[x]/I from the leading-term ideal; nullopt when I is
/// the unit ideal.
std::optional<int> krull_dimension(const QuotientRing& ring);

/// Exact quotient f / g; throws unless g divides f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Copy of `ring` with another monomial order.
RingRef with_order(const RingRef& ring, MonomialOrder order);

}  // namespace jacal
