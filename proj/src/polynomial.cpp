#include "jacal/polynomial.hpp"

#include <algorithm>

#include "jacal/error.hpp"

namespace jacal {

Polynomial Polynomial::constant(const RingRef& ring, const Scalar& c) {
  return term(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::constant(const RingRef& ring, long c) {
  return constant(ring, ring->field().from_int(c));
}

Polynomial Polynomial::variable(const RingRef& ring, std::size_t index) {
  if (index >= ring->nvars())
    throw AlgebraError(AlgebraError::Kind::OutOfRange, "variable index out of range");
  return term(ring, Monomial::variable(ring->nvars(), index), ring->field().one());
}

Polynomial Polynomial::term(const RingRef& ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const RingRef& ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(const RingRef& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coefficient * c});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coefficient().is_one()) return *this;
  return scaled(lead_coefficient().inverse());
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial sub_mul(const Polynomial& a, const Scalar& c, const Monomial& m, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const MonomialOrder& order = a.ring()->order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0, j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size()) {
      out.push_back(at[i++]);
      continue;
    }
    Monomial bm = bt[j].monomial * m;
    int cmp = i == at.size() ? -1 : order.compare(at[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, -(c * bt[j].coefficient)});
      ++j;
    } else {
      Scalar s = at[i].coefficient - c * bt[j].coefficient;
      if (!s.is_zero()) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted_terms(a.ring(), std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return sub_mul(a, -a.ring()->field().one(), Monomial(a.ring()->nvars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return sub_mul(a, a.ring()->field().one(), Monomial(a.ring()->nvars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      terms.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a.terms()[i].monomial == b.terms()[i].monomial) ||
        !(a.terms()[i].coefficient == b.terms()[i].coefficient))
      return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const RingDescriptor& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    bool negative = t.coefficient.prints_negative();
    Scalar magnitude = negative ? -t.coefficient : t.coefficient;
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.monomial.is_one()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += monomial_to_string(t.monomial, *ring_);
    } else {
      out += magnitude.to_string() + "*" + monomial_to_string(t.monomial, *ring_);
    }
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  const RingRef& ring = f.ring();
  if (index >= ring->nvars())
    throw AlgebraError(AlgebraError::Kind::OutOfRange,
                       "partial derivative index " + std::to_string(index) + " out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    int e = t.monomial[index];
    if (e == 0) continue;
    Scalar c = t.coefficient * ring->field().from_int(e);
    if (c.is_zero()) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    terms.push_back({m, c});
  }
  // Differentiation can break the order of the surviving terms.
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial remap(const Polynomial& f, const RingRef& target, std::span<const std::size_t> var_map) {
  if (var_map.size() != f.ring()->nvars())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "variable map has wrong length");
  if (!(target->field() == f.ring()->field()))
    throw AlgebraError(AlgebraError::Kind::RingMismatch, "remap across different fields");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i)
      if (t.monomial[i] != 0) m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.ring()->nvars())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "substitution has wrong length");
  if (images.empty()) {
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "substitution into a ring without variables");
  }
  const RingRef& target = images[0].ring();
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] != 0) p = p * images[i].pow(static_cast<unsigned>(t.monomial[i]));
    result += p;
  }
  return result;
}

}  // namespace jacal
