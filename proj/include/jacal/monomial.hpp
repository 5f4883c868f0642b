#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace jacal {

inline constexpr std::size_t kMaxVariables = 24;

/// Exponent vector of fixed length with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Bit i set iff variable i occurs; used as a divisibility prefilter.
  std::uint32_t support() const { return support_; }

  void set(std::size_t i, int e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint16_t n_ = 0;
  std::int32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

/// Monomial orders on k[x_0..x_{n-1}] with x_0 > x_1 > ... > x_{n-1}.
/// `Elimination` is grevlex on the first `block` variables followed by
/// grevlex on the rest, so it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  const char* name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace jacal
