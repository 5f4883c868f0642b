#pragma once

#include <span>
#include <string>
#include <vector>

#include "jacal/field.hpp"
#include "jacal/monomial.hpp"
#include "jacal/ring.hpp"

namespace jacal {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingRef ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingRef& ring, const Scalar& c);
  static Polynomial constant(const RingRef& ring, long c);
  static Polynomial variable(const RingRef& ring, std::size_t index);
  static Polynomial term(const RingRef& ring, const Monomial& m, const Scalar& c);
  /// Sorts and combines arbitrary terms into canonical form.
  static Polynomial from_terms(const RingRef& ring, std::vector<Term> terms);
  /// Adopts terms that are already canonical (strictly descending, nonzero).
  static Polynomial from_sorted_terms(const RingRef& ring, std::vector<Term> terms);

  const RingRef& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Nonzero constant.
  bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  bool has_constant_term() const { return !terms_.empty() && terms_.back().monomial.is_one(); }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().monomial; }
  const Scalar& lead_coefficient() const { return terms_.front().coefficient; }

  /// Highest total degree of a term; -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical string: `5*x^4 - y^2*z`; `0` for zero.
  std::string to_string() const;

 private:
  RingRef ring_;
  std::vector<Term> terms_;
};

/// a - c*m*b, computed by a single merge.
Polynomial sub_mul(const Polynomial& a, const Scalar& c, const Monomial& m, const Polynomial& b);

Polynomial partial_derivative(const Polynomial& f, std::size_t index);

/// Moves f into `target`, sending variable i to variable var_map[i].
Polynomial remap(const Polynomial& f, const RingRef& target, std::span<const std::size_t> var_map);

/// Replaces variable i of f's ring by images[i] (all images in one ring).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

std::string monomial_to_string(const Monomial& m, const RingDescriptor& ring);

}  // namespace jacal
