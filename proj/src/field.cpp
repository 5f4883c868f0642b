#include "jacal/field.hpp"

#include "jacal/error.hpp"

namespace jacal {

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.modulus() != b.modulus())
    throw AlgebraError(AlgebraError::Kind::RingMismatch,
                       "scalars from different fields: " + a.field().to_string() + " vs " +
                           b.field().to_string());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw AlgebraError(AlgebraError::Kind::InvalidArgument,
                       "field characteristic must be below 2^31");
  if (!is_prime(p))
    throw AlgebraError(AlgebraError::Kind::InvalidArgument,
                       "GF(" + std::to_string(p) + "): " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (p_ == 0) return Scalar(mpq_class(value));
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) return Scalar(value);
  mpz_class num = value.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = value.get_den() % p_;
  if (den == 0)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument,
                       "denominator vanishes in " + to_string());
  Scalar n(static_cast<std::uint32_t>(num.get_ui()), p_);
  Scalar d(static_cast<std::uint32_t>(den.get_ui()), p_);
  return n / d;
}

std::string Field::to_string() const {
  return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

bool Scalar::is_minus_one() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value + 1 == r->modulus;
  return std::get<mpq_class>(rep_) == -1;
}

Field Scalar::field() const {
  return is_rational() ? Field::rationals() : Field::prime(modulus());
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&rep_))
    return Scalar(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "division by zero");
  if (auto* r = std::get_if<Residue>(&rep_))
    return Scalar(pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus);
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (auto* r = std::get_if<Scalar::Residue>(&a.rep_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Scalar::Residue>(b.rep_).value;
    return Scalar(static_cast<std::uint32_t>(s % r->modulus), r->modulus);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (auto* r = std::get_if<Scalar::Residue>(&a.rep_)) {
    std::uint64_t s = std::uint64_t{r->value} * std::get<Scalar::Residue>(b.rep_).value;
    return Scalar(static_cast<std::uint32_t>(s % r->modulus), r->modulus);
  }
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus() != b.modulus()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  return a.residue() == b.residue();
}

bool Scalar::prints_negative() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value > r->modulus / 2;
  return sgn(std::get<mpq_class>(rep_)) < 0;
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&rep_)) {
    long v = r->value;
    if (r->value > r->modulus / 2) v -= static_cast<long>(r->modulus);
    return std::to_string(v);
  }
  return std::get<mpq_class>(rep_).get_str();
}

}  // namespace jacal
