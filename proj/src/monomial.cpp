#include "jacal/monomial.hpp"

#include <algorithm>

#include "jacal/error.hpp"

namespace jacal {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVariables)
    throw AlgebraError(AlgebraError::Kind::OutOfRange,
                       "too many variables (max " + std::to_string(kMaxVariables) + ")");
}

Monomial::Monomial(std::size_t nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  if (index >= nvars) throw AlgebraError(AlgebraError::Kind::OutOfRange, "variable index out of range");
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > 0xffff) throw AlgebraError(AlgebraError::Kind::OutOfRange, "exponent out of range");
  degree_ += e - exps_[i];
  exps_[i] = static_cast<std::uint16_t>(e);
  if (e > 0)
    support_ |= (1u << i);
  else
    support_ &= ~(1u << i);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (support_ & ~other.support_) != 0) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, a.exps_[i] - b.exps_[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::min(a.exps_[i], b.exps_[i]));
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_ || a.degree_ != b.degree_ || a.support_ != b.support_) return false;
  return std::equal(a.exps_.begin(), a.exps_.begin() + a.n_, b.exps_.begin());
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return grevlex_range(a, b, 0, a.size());
    case Kind::Elimination: {
      std::size_t split = std::min(block_, a.size());
      if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
      return grevlex_range(a, b, split, a.size());
    }
  }
  return 0;
}

const char* MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GRevLex: return "grevlex";
    case Kind::Elimination: return "elimination";
  }
  return "?";
}

}  // namespace jacal
