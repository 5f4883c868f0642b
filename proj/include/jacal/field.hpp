#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace jacal {

class Scalar;

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws AlgebraError if p is not a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of a Field in canonical form: reduced fraction with positive
/// denominator, or residue in 0..p-1.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : rep_(q) { std::get<mpq_class>(rep_).canonicalize(); }
  Scalar(std::uint32_t value, std::uint32_t modulus) : rep_(Residue{value % modulus, modulus}) {}

  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  std::uint32_t modulus() const {
    return is_rational() ? 0 : std::get<Residue>(rep_).modulus;
  }
  Field field() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rationals print as `a` or `a/b`; residues use the symmetric
  /// representative in (-p/2, p/2].
  std::string to_string() const;
  /// Sign of the printed representative.
  bool prints_negative() const;

  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  std::uint32_t residue() const { return std::get<Residue>(rep_).value; }

 private:
  std::variant<Residue, mpq_class> rep_;
};

}  // namespace jacal
