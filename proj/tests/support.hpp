#pragma once

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacal/ideal.hpp"
#include "jacal/polynomial.hpp"

namespace jacal {
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const PolyMatrix& m, std::ostream* os) { *os << "\n" << m.to_string(); }
}  // namespace jacal

namespace jacal::testing {

// Small recursive-descent reader for polynomials in tests: + - * ^ and
// parentheses, integer constants, variable names of the ring.
class PolyReader {
 public:
  PolyReader(RingRef ring, std::string text) : ring_(std::move(ring)), s_(std::move(text)) {}

  Polynomial read() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in '" + s_ + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial sum() {
    Polynomial acc = eat('-') ? -product() : product();
    while (true) {
      if (eat('+')) acc = acc + product();
      else if (eat('-')) acc = acc - product();
      else return acc;
    }
  }
  Polynomial product() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  Polynomial atom() {
    if (eat('(')) {
      Polynomial p = sum();
      if (!eat(')')) throw std::invalid_argument("missing )");
      return p;
    }
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, std::stol(s_.substr(start, pos_ - start)));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    int idx = ring_->index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
  }

  RingRef ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline Polynomial P(const RingRef& ring, const std::string& text) { return PolyReader(ring, text).read(); }

inline std::vector<Polynomial> Ps(const RingRef& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

inline Ideal I(const QuotientRing& ring, const std::vector<std::string>& texts) {
  return Ideal(ring, Ps(ring.ambient(), texts));
}

inline PolyMatrix M(const RingRef& ring, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& r : rows) out.push_back(Ps(ring, r));
  return PolyMatrix::from_rows(ring, out);
}

// Seed for property tests: JACAL_SEED if set, else a fixed value.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("JACAL_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

// Random sparse polynomial with small coefficients and bounded degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingRef& ring, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(0, static_cast<int>(ring->nvars()) - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial p(ring);
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(ring->nvars());
    for (int d = deg(rng); d > 0; --d) {
      auto i = static_cast<std::size_t>(var(rng));
      m.set(i, m[i] + 1);
    }
    int c = coeff(rng);
    if (c != 0) p = p + Polynomial::term(ring, m, ring->field().from_int(c));
  }
  return p;
}

}  // namespace jacal::testing
