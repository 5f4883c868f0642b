#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "jacal/error.hpp"
#include "jacal/kernels.hpp"
#include "jacal/matrix.hpp"
#include "support.hpp"

using namespace jacal;
using jacal::testing::M;
using jacal::testing::P;

namespace {

RingRef qq(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(Field::rationals(), std::move(vars), order);
}

}  // namespace

TEST(Field, RejectsComposite) {
  try {
    Field::prime(4);
    FAIL() << "expected an error";
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("not prime"), std::string::npos);
  }
  EXPECT_THROW(Field::prime(1), AlgebraError);
  EXPECT_THROW(Field::prime(2147483659ULL), AlgebraError);
  EXPECT_EQ(Field::prime(2147483647ULL).characteristic(), 2147483647u);
}

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(13);
  Scalar five = f.from_int(5);
  EXPECT_EQ((five * five).to_string(), "-1");
  EXPECT_EQ(five.inverse() * five, f.one());
  EXPECT_EQ(f.from_int(-1).to_string(), "-1");
  EXPECT_EQ(f.from_int(6).to_string(), "6");
  EXPECT_EQ(f.from_int(7).to_string(), "-6");
  EXPECT_EQ(f.from_rational(mpq_class(1, 2)) * f.from_int(2), f.one());
}

TEST(Field, RationalCanonicalForm) {
  Field q = Field::rationals();
  EXPECT_EQ(q.from_rational(mpq_class(2, -4)).to_string(), "-1/2");
  EXPECT_EQ(q.from_rational(mpq_class(6, 3)), q.from_int(2));
}

TEST(Polynomial, ArithmeticExamples) {
  auto r = qq({"x", "y"});
  EXPECT_TRUE((P(r, "x") + P(r, "-x")).is_zero());
  EXPECT_EQ((P(r, "x+y") * P(r, "x-y")).to_string(), "x^2 - y^2");
  auto f2 = make_ring(Field::prime(2), {"x", "y"});
  EXPECT_EQ((P(f2, "x+y") * P(f2, "x+y")).to_string(), "x^2 + y^2");
  EXPECT_EQ(P(r, "5*x^4 - y^2").scaled(Field::rationals().from_int(-2)).to_string(), "-10*x^4 + 2*y^2");
}

TEST(Polynomial, CanonicalString) {
  auto r = qq({"x", "y", "z"});
  EXPECT_EQ(P(r, "-y^2*z + 5*x^4").to_string(), "5*x^4 - y^2*z");
  EXPECT_EQ(P(r, "0").to_string(), "0");
  EXPECT_EQ(P(r, "1 - x").to_string(), "-x + 1");
  EXPECT_EQ(Polynomial::constant(r, Field::rationals().from_rational(mpq_class(1, 3))).to_string(), "1/3");
}

TEST(Polynomial, Orders) {
  auto lex = qq({"x", "y", "z"}, MonomialOrder::lex());
  auto grev = qq({"x", "y", "z"});
  EXPECT_EQ(P(lex, "y^3 + x").to_string(), "x + y^3");
  EXPECT_EQ(P(grev, "y^3 + x").to_string(), "y^3 + x");
  EXPECT_EQ(P(grev, "x*z^2 + y^3").to_string(), "y^3 + x*z^2");
  auto elim = qq({"t", "x", "y"}, MonomialOrder::elimination(1));
  EXPECT_EQ(P(elim, "x^5 + t").to_string(), "t + x^5");
}

TEST(Polynomial, PartialDerivative) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(partial_derivative(P(r, "x^5"), 0).to_string(), "5*x^4");
  EXPECT_EQ(partial_derivative(P(r, "x*y"), 1).to_string(), "x");
  auto f5 = make_ring(Field::prime(5), {"x", "y"});
  EXPECT_TRUE(partial_derivative(P(f5, "x^5"), 0).is_zero());
  EXPECT_THROW(partial_derivative(P(r, "x"), 2), AlgebraError);
}

TEST(Polynomial, RingMismatch) {
  auto a = qq({"x", "y"});
  auto b = qq({"x", "z"});
  EXPECT_THROW(P(a, "x") + P(b, "x"), AlgebraError);
  // Structurally equal descriptors are interchangeable.
  auto c = qq({"x", "y"});
  EXPECT_EQ((P(a, "x") + P(c, "y")).to_string(), "x + y");
}

TEST(Matrix, MinorsExamples) {
  auto r = qq({"x", "y"});
  auto m = M(r, {{"5*x^4", "0"}, {"y", "x"}});
  auto ones = matrix_minors(m, 1);
  std::vector<std::string> got;
  for (const auto& p : ones) got.push_back(p.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"5*x^4", "0", "y", "x"}));
  EXPECT_EQ(matrix_minors(PolyMatrix::identity(r, 2), 2).size(), 1u);
  EXPECT_EQ(matrix_minors(PolyMatrix::identity(r, 2), 2)[0].to_string(), "1");
  EXPECT_THROW(matrix_minors(m, 3), AlgebraError);
  EXPECT_THROW(matrix_minors(m, 0), AlgebraError);
}

TEST(Matrix, MinorOrderIsLexicographic) {
  auto r = qq({"a", "b", "c", "d", "e", "f"});
  auto m = M(r, {{"a", "b", "c"}, {"d", "e", "f"}});
  auto two = matrix_minors(m, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], P(r, "a*e - b*d"));
  EXPECT_EQ(two[1], P(r, "a*f - c*d"));
  EXPECT_EQ(two[2], P(r, "b*f - c*e"));
}

// ---------------------------------------------------------------- properties

namespace {

Polynomial permutation_det(const PolyMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(m.ring(), 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    acc = inversions % 2 ? acc - term : acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST(Properties, RingLaws) {
  std::mt19937_64 rng(jacal::testing::test_seed());
  for (auto field : {Field::rationals(), Field::prime(7)}) {
    auto r = make_ring(field, {"x", "y", "z"});
    for (int it = 0; it < 200; ++it) {
      auto f = jacal::testing::random_polynomial(rng, r, 5, 4);
      auto g = jacal::testing::random_polynomial(rng, r, 5, 4);
      auto h = jacal::testing::random_polynomial(rng, r, 5, 4);
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ((f + g).terms().size(), (g + f).terms().size());
      EXPECT_EQ(partial_derivative(f * g, 1), f * partial_derivative(g, 1) + g * partial_derivative(f, 1));
      EXPECT_TRUE((f - f).is_zero());
    }
  }
}

TEST(Properties, OrdersAreMultiplicativeTotalOrders) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 1);
  std::uniform_int_distribution<int> e(0, 4);
  auto random_monomial = [&] {
    Monomial m(4);
    for (std::size_t i = 0; i < 4; ++i) m.set(i, e(rng));
    return m;
  };
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(2)}) {
    for (int it = 0; it < 1000; ++it) {
      Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
      int ab = order.compare(a, b);
      EXPECT_EQ(ab, -order.compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      if (ab < 0 && order.compare(b, c) < 0) EXPECT_LT(order.compare(a, c), 0);
      if (ab != 0) EXPECT_EQ(ab, order.compare(a * c, b * c));
      EXPECT_GE(order.compare(a * c, a), 0);
    }
  }
}

TEST(Properties, MinorsMatchPermutationSum) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 2);
  auto r = qq({"x", "y"});
  for (int it = 0; it < 30; ++it) {
    PolyMatrix m(r, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = jacal::testing::random_polynomial(rng, r, 3, 2);
    EXPECT_EQ(determinant(m), permutation_det(m));
    EXPECT_EQ(matrix_minors(m, 3)[0], permutation_det(m));
  }
}

TEST(Kernels, ParallelMinorsMatchSerial) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 3);
  auto r = qq({"x", "y", "z"});
  PolyMatrix m(r, 4, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = jacal::testing::random_polynomial(rng, r, 3, 2);
  for (std::size_t t = 1; t <= 4; ++t) EXPECT_EQ(kernels::minors(m, t), kernels::serial::minors(m, t));
}
