#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jacal/polynomial.hpp"

namespace jacal {

struct VectorTerm {
  Monomial monomial;
  std::uint32_t component;
  Scalar coefficient;
};

/// How terms of a free module are ordered: compare monomials first and
/// break ties by position (lower index is larger), or the reverse.
enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

/// Sparse element of a free module R^r: terms strictly descending in the
/// module order of the owning FreeModule, no zero coefficients.
struct ModuleVector {
  std::vector<VectorTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VectorTerm& lead() const { return terms.front(); }
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);
};

/// A free module k[x]^rank with a module order; owns all term comparisons.
class FreeModule {
 public:
  FreeModule(RingRef ring, std::size_t rank, ModuleOrderKind kind = ModuleOrderKind::TermOverPosition);

  const RingRef& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  ModuleOrderKind kind() const { return kind_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const VectorTerm& a, const VectorTerm& b) const {
    return compare(a.monomial, a.component, b.monomial, b.component);
  }

  ModuleVector from_column(std::span<const Polynomial> column) const;
  ModuleVector from_polynomial(const Polynomial& p, std::uint32_t component = 0) const;
  std::vector<Polynomial> to_column(const ModuleVector& v) const;
  ModuleVector unit(std::uint32_t component) const;

  /// a - c*m*b by a single merge.
  ModuleVector sub_mul(const ModuleVector& a, const Scalar& c, const Monomial& m, const ModuleVector& b) const;
  ModuleVector add(const ModuleVector& a, const ModuleVector& b) const;
  ModuleVector subtract(const ModuleVector& a, const ModuleVector& b) const;
  ModuleVector scale(const ModuleVector& a, const Scalar& c) const;
  ModuleVector times_polynomial(const ModuleVector& a, const Polynomial& p) const;
  ModuleVector monic(const ModuleVector& a) const;

 private:
  RingRef ring_;
  std::size_t rank_;
  ModuleOrderKind kind_;
};

}  // namespace jacal
