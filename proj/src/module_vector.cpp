#include "jacal/module_vector.hpp"

#include <algorithm>

#include "jacal/error.hpp"

namespace jacal {

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& s = a.terms[i];
    const auto& t = b.terms[i];
    if (s.component != t.component || !(s.monomial == t.monomial) || !(s.coefficient == t.coefficient))
      return false;
  }
  return true;
}

FreeModule::FreeModule(RingRef ring, std::size_t rank, ModuleOrderKind kind)
    : ring_(std::move(ring)), rank_(rank), kind_(kind) {}

int FreeModule::compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
  if (kind_ == ModuleOrderKind::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return ring_->order().compare(a, b);
  }
  if (int c = ring_->order().compare(a, b); c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

ModuleVector FreeModule::from_column(std::span<const Polynomial> column) const {
  if (column.size() != rank_)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument,
                       "column of length " + std::to_string(column.size()) + " in rank " +
                           std::to_string(rank_) + " module");
  ModuleVector v;
  for (std::uint32_t c = 0; c < column.size(); ++c) {
    require_same_ring(ring_, column[c].ring());
    for (const auto& t : column[c].terms()) v.terms.push_back({t.monomial, c, t.coefficient});
  }
  std::sort(v.terms.begin(), v.terms.end(),
            [&](const VectorTerm& a, const VectorTerm& b) { return compare(a, b) > 0; });
  return v;
}

ModuleVector FreeModule::from_polynomial(const Polynomial& p, std::uint32_t component) const {
  require_same_ring(ring_, p.ring());
  ModuleVector v;
  v.terms.reserve(p.size());
  for (const auto& t : p.terms()) v.terms.push_back({t.monomial, component, t.coefficient});
  return v;
}

std::vector<Polynomial> FreeModule::to_column(const ModuleVector& v) const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : v.terms) parts.at(t.component).push_back({t.monomial, t.coefficient});
  std::vector<Polynomial> column;
  column.reserve(rank_);
  for (auto& p : parts) column.push_back(Polynomial::from_terms(ring_, std::move(p)));
  return column;
}

ModuleVector FreeModule::unit(std::uint32_t component) const {
  ModuleVector v;
  v.terms.push_back({Monomial(ring_->nvars()), component, ring_->field().one()});
  return v;
}

ModuleVector FreeModule::sub_mul(const ModuleVector& a, const Scalar& c, const Monomial& m,
                                 const ModuleVector& b) const {
  ModuleVector out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  const auto& at = a.terms;
  const auto& bt = b.terms;
  std::size_t i = 0, j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size()) {
      out.terms.push_back(at[i++]);
      continue;
    }
    Monomial bm = bt[j].monomial * m;
    int cmp = i == at.size() ? -1 : compare(at[i].monomial, at[i].component, bm, bt[j].component);
    if (cmp > 0) {
      out.terms.push_back(at[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({bm, bt[j].component, -(c * bt[j].coefficient)});
      ++j;
    } else {
      Scalar s = at[i].coefficient - c * bt[j].coefficient;
      if (!s.is_zero()) out.terms.push_back({bm, bt[j].component, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

ModuleVector FreeModule::add(const ModuleVector& a, const ModuleVector& b) const {
  return sub_mul(a, -ring_->field().one(), Monomial(ring_->nvars()), b);
}

ModuleVector FreeModule::subtract(const ModuleVector& a, const ModuleVector& b) const {
  return sub_mul(a, ring_->field().one(), Monomial(ring_->nvars()), b);
}

ModuleVector FreeModule::scale(const ModuleVector& a, const Scalar& c) const {
  ModuleVector out;
  if (c.is_zero()) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.monomial, t.component, t.coefficient * c});
  return out;
}

ModuleVector FreeModule::times_polynomial(const ModuleVector& a, const Polynomial& p) const {
  ModuleVector out;
  for (const auto& t : p.terms()) out = sub_mul(out, -t.coefficient, t.monomial, a);
  return out;
}

ModuleVector FreeModule::monic(const ModuleVector& a) const {
  if (a.is_zero() || a.lead().coefficient.is_one()) return a;
  return scale(a, a.lead().coefficient.inverse());
}

}  // namespace jacal
