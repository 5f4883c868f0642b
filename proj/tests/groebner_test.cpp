#include <gtest/gtest.h>

#include "checks/groebner_checks.hpp"
#include "jacal/error.hpp"
#include "jacal/ideal.hpp"
#include "jacal/kernels.hpp"
#include "oracle/linear_oracle.hpp"
#include "support.hpp"

using namespace jacal;
using jacal::testing::I;
using jacal::testing::M;
using jacal::testing::P;
using jacal::testing::Ps;

namespace {

RingRef qq(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(Field::rationals(), std::move(vars), order);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

using S = std::vector<std::string>;

}  // namespace

TEST(Buchberger, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(strings(buchberger(Ps(r, {"x"}), MonomialOrder::grevlex()).basis()), S{"x"});
  EXPECT_EQ(strings(buchberger(Ps(r, {"x^5", "x*y", "x^3"}), MonomialOrder::grevlex()).basis()), (S{"x^3", "x*y"}));
  EXPECT_TRUE(buchberger(Ps(r, {"0"}), MonomialOrder::grevlex()).basis().empty());
  auto lex = buchberger(Ps(r, {"x^2 - y", "x*y - 1"}), MonomialOrder::lex());
  EXPECT_EQ(strings(lex.basis()), (S{"x - y^2", "y^3 - 1"}));
}

TEST(Buchberger, JacobianEntriesOfCurveUnion) {
  // Entries of the Jacobian of (xy, x^5 - xz^4) over F_13.
  auto r = make_ring(Field::prime(13), {"x", "y", "z"});
  auto gens = Ps(r, {"y", "x", "5*x^4 - z^4", "-4*x*z^3", "x*y", "x^5 - x*z^4"});
  EXPECT_EQ(strings(buchberger(gens, MonomialOrder::grevlex()).basis()), (S{"z^4", "x", "y"}));
}

TEST(NormalForm, Examples) {
  auto r = qq({"x", "y"});
  QuotientRing base(r);
  EXPECT_TRUE(I(base, {"x^3", "x*y"}).normal_form(P(r, "x^5")).is_zero());
  EXPECT_EQ(I(base, {"x^4", "y"}).normal_form(P(r, "x - y")).to_string(), "x");
  EXPECT_EQ(I(base, {"x^2 - y^2"}).normal_form(P(r, "x^2")).to_string(), "y^2");
  auto other = qq({"u", "v"});
  EXPECT_THROW(I(base, {"x"}).normal_form(P(other, "u")), AlgebraError);
}

TEST(Syzygies, Examples) {
  auto r = qq({"x", "y"});
  QuotientRing base(r);
  auto s = syzygies(M(r, {{"x", "y"}}), base);
  ASSERT_EQ(s.cols(), 1u);
  EXPECT_EQ(s.column(0), Ps(r, {"y", "-x"}));

  QuotientRing ring(r, Ps(r, {"x^5", "x*y"}));
  auto s2 = syzygies(M(r, {{"x^3"}}), ring);
  Ideal relations(ring, s2.row(0));
  EXPECT_TRUE(ideal_equal(relations, I(ring, {"x^2", "y"})));
}

TEST(Syzygies, PresentationOfIdealInCurveUnion) {
  auto r = make_ring(Field::prime(13), {"x", "y", "z"});
  QuotientRing ring(r, Ps(r, {"x*y", "x^5 - x*z^4"}));
  auto gens = M(r, {{"x^3", "z"}});
  auto shown = M(r, {{"z", "x^2", "y"}, {"-x^3", "-x*z^3", "0"}});
  for (std::size_t c = 0; c < shown.cols(); ++c)
    for (const auto& e : (gens * shown).column(c)) EXPECT_TRUE(ring.is_zero(e));
  auto syz = syzygies(gens, ring);
  EXPECT_TRUE(Submodule::from_matrix(ring, shown).contains_columns(syz));
  EXPECT_TRUE(Submodule::from_matrix(ring, syz).contains_columns(shown));
}

TEST(Eliminate, Examples) {
  auto r = qq({"t", "x", "y"});
  QuotientRing base(r);
  EXPECT_TRUE(ideal_equal(eliminate(I(base, {"t - x^2", "t - y"}), {1, 2}), I(base, {"x^2 - y"})));
  EXPECT_TRUE(ideal_equal(eliminate(I(base, {"x"}), {1}), I(base, {"x"})));
  EXPECT_TRUE(ideal_equal(eliminate(I(base, {"x + t", "y + t"}), {1, 2}), I(base, {"x - y"})));
  QuotientRing quotient(r, Ps(r, {"x^2"}));
  EXPECT_THROW(eliminate(I(quotient, {"x"}), {1}), AlgebraError);
}

TEST(Intersect, Examples) {
  auto r = qq({"x", "y"});
  QuotientRing base(r);
  EXPECT_TRUE(ideal_equal(ideal_intersect(I(base, {"x"}), I(base, {"y"})), I(base, {"x*y"})));
  auto j = I(base, {"x^2 - y", "x*y"});
  EXPECT_TRUE(ideal_equal(ideal_intersect(j, Ideal::unit(base)), j));

  auto f13 = make_ring(Field::prime(13), {"x", "y", "z"});
  QuotientRing amb(f13);
  std::vector<Ideal> parts{I(amb, {"x"}), I(amb, {"x + z", "y"}), I(amb, {"x - z", "y"}), I(amb, {"x + 5*z", "y"}),
                           I(amb, {"x - 5*z", "y"})};
  EXPECT_TRUE(ideal_equal(ideal_intersect(parts), I(amb, {"x*y", "x^5 - x*z^4"})));
}

TEST(Colon, Examples) {
  auto r = qq({"x", "y"});
  QuotientRing base(r);
  EXPECT_TRUE(ideal_equal(ideal_colon(I(base, {"x^2"}), I(base, {"x"})), I(base, {"x"})));
  EXPECT_TRUE(ideal_equal(ideal_colon(I(base, {"x*y"}), I(base, {"x"})), I(base, {"y"})));
  EXPECT_TRUE(ideal_colon(I(base, {"x"}), Ideal::zero(base)).is_unit());
  // Over a quotient: (0 : x) in k[x,y]/(x^5, xy) is (x^4, y).
  QuotientRing ring(r, Ps(r, {"x^5", "x*y"}));
  EXPECT_TRUE(ideal_equal(ideal_colon(Ideal::zero(ring), I(ring, {"x"})), I(ring, {"x^4", "y"})));
}

TEST(Radical, Examples) {
  auto r = qq({"x", "y", "z"});
  QuotientRing base(r);
  EXPECT_TRUE(radical_member(P(r, "z"), I(base, {"x", "y", "z^4"})));
  EXPECT_TRUE(radical_member(P(r, "x"), I(base, {"x"})));
  EXPECT_TRUE(radical_member(P(r, "x + y"), I(base, {"x^2", "y^2"})));
  EXPECT_FALSE(radical_member(P(r, "x + z"), I(base, {"x^2", "y^2"})));
}

TEST(IdealOps, Examples) {
  auto r = qq({"x", "y"});
  QuotientRing base(r);
  EXPECT_TRUE(ideal_equal(ideal_power(I(base, {"x", "y"}), 2), I(base, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(ideal_equal(I(base, {"x", "y"}), I(base, {"y", "x + y"})));
  EXPECT_TRUE(ideal_power(I(base, {"x"}), 0).is_unit());
  EXPECT_THROW(ideal_power(I(base, {"x"}), -1), AlgebraError);
  EXPECT_TRUE(ideal_equal(ideal_sum(I(base, {"x"}), I(base, {"y"})), I(base, {"x", "y"})));
  EXPECT_TRUE(ideal_equal(ideal_product(I(base, {"x"}), I(base, {"x", "y"})), I(base, {"x^2", "x*y"})));
  auto other = qq({"u"});
  EXPECT_THROW(ideal_sum(I(base, {"x"}), I(QuotientRing(other), {"u"})), AlgebraError);
}

TEST(IdealDisplay, DropsDefiningIdeal) {
  auto r = qq({"x", "y", "z"});
  QuotientRing ring(r, Ps(r, {"x^2 - y^2", "x^2 - z^2", "x*y", "x*z", "y*z"}));
  EXPECT_EQ(I(ring, {"x^2"}).to_string(), "(z^2)");
  EXPECT_EQ(I(ring, {"x*y"}).to_string(), "(0)");
  EXPECT_EQ(I(ring, {"x + 1"}).to_string(), "(1)");
}

TEST(KrullDimension, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_EQ(QuotientRing(r).dimension(), 2);
  EXPECT_EQ(QuotientRing(r, Ps(r, {"x^5", "x*y"})).dimension(), 1);
  EXPECT_EQ(QuotientRing(r, Ps(r, {"x", "y"})).dimension(), 0);
  EXPECT_EQ(QuotientRing(r, Ps(r, {"x - 1", "x"})).dimension(), std::nullopt);
  auto f13 = make_ring(Field::prime(13), {"x", "y", "z"});
  EXPECT_EQ(QuotientRing(f13, Ps(f13, {"x*y", "x^5 - x*z^4"})).dimension(), 2);
}

TEST(CharacteristicNotes, ExponentDivisibleByCharacteristic) {
  auto f5 = make_ring(Field::prime(5), {"x", "y"});
  QuotientRing ring(f5, Ps(f5, {"x^5", "x*y"}));
  ASSERT_EQ(ring.characteristic_notes().size(), 1u);
  EXPECT_NE(ring.characteristic_notes()[0].find("characteristic 5"), std::string::npos);
  auto q = qq({"x", "y"});
  EXPECT_TRUE(QuotientRing(q, Ps(q, {"x^5"})).characteristic_notes().empty());
}

// ---------------------------------------------------------------- properties

TEST(Properties, RandomIdealInvariants) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 10);
  for (int it = 0; it < 40; ++it) {
    auto ring = make_ring(it % 2 ? Field::prime(101) : Field::rationals(), it % 3 ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"},
                          it % 4 == 0 ? MonomialOrder::lex() : MonomialOrder::grevlex());
    auto gens = checks::random_generators(rng, ring, 4, 3);
    EXPECT_EQ(checks::groebner_invariants(rng, gens, 10), "");
  }
}

TEST(Properties, SyzygyCompleteness) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 11);
  auto ring = qq({"x", "y"});
  for (int it = 0; it < 10; ++it) {
    std::vector<Polynomial> row;
    for (int k = 0; k < 3; ++k) row.push_back(jacal::testing::random_polynomial(rng, ring, 2, 2));
    if (std::all_of(row.begin(), row.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    EXPECT_EQ(checks::syzygy_completeness(row, 4), "");
  }
}

TEST(Properties, IntersectionAndRadical) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 12);
  auto ring = qq({"x", "y"});
  for (int it = 0; it < 15; ++it) {
    EXPECT_EQ(checks::intersection_agrees(rng, ring, 8), "");
    EXPECT_EQ(checks::radical_agrees(rng, ring), "");
  }
}

TEST(Properties, ColonSatisfiesDefinition) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 13);
  auto ring = qq({"x", "y"});
  QuotientRing base(ring);
  for (int it = 0; it < 15; ++it) {
    Ideal j(base, checks::random_generators(rng, ring, 3, 3));
    Polynomial f = jacal::testing::random_polynomial(rng, ring, 2, 2);
    Ideal c = ideal_colon(j, f);
    for (const auto& g : c.generators()) EXPECT_TRUE(j.contains(g * f));
    for (const auto& g : j.generators()) EXPECT_TRUE(c.contains(g));
  }
}

TEST(Properties, KrullDimensionIndependentOfOrder) {
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^5", "x*y"}, {"x*y", "x^5 - x*z^4"}, {"x^2 - y^2", "x^2 - z^2", "x*y", "x*z", "y*z"}, {"x^2"}, {"x*y"}}) {
    auto g = qq({"x", "y", "z"});
    auto l = qq({"x", "y", "z"}, MonomialOrder::lex());
    EXPECT_EQ(QuotientRing(g, Ps(g, gens)).dimension(), QuotientRing(l, Ps(l, gens)).dimension());
  }
}

TEST(Kernels, ParallelSyzygyLiftsMatchSerial) {
  std::mt19937_64 rng(jacal::testing::test_seed() + 14);
  auto ring = qq({"x", "y", "z"});
  FreeModule space(ring, 1);
  for (int it = 0; it < 5; ++it) {
    std::vector<ModuleVector> gens;
    for (const auto& g : checks::random_generators(rng, ring, 4, 3)) gens.push_back(space.from_polynomial(g));
    auto gb = GroebnerBasis::compute(space, gens, {.track_representation = true});
    EXPECT_EQ(kernels::schreyer_lifts(gb), kernels::serial::schreyer_lifts(gb));
    EXPECT_EQ(kernels::normal_forms(gb, gens), kernels::serial::normal_forms(gb, gens));
  }
}
