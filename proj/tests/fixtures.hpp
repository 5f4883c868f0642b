#pragma once

// The worked examples as affine models: rings, modules and normalizations.

#include "jacal/module.hpp"
#include "jacal/normalization.hpp"
#include "support.hpp"

namespace jacal::fixtures {

using jacal::testing::P;
using jacal::testing::Ps;

// k[x,y]/(x^5, xy) with M = R/x^3 R.
struct PlaneCurveTail {
  RingRef base = make_ring(Field::rationals(), {"x", "y"});
  QuotientRing ring{base, Ps(base, {"x^5", "x*y"})};
  FPModule m = FPModule::cyclic(ring, {P(base, "x^3")});
};

// F_13[x,y,z]/(xy, x^5 - x z^4), i = 5, with I = (x^3, z).
struct CurveUnion {
  RingRef base = make_ring(Field::prime(13), {"x", "y", "z"});
  QuotientRing ring{base, Ps(base, {"x*y", "x^5 - x*z^4"})};
  std::vector<Polynomial> ideal_gens = Ps(base, {"x^3", "z"});
  FPModule quotient = FPModule::cyclic(ring, ideal_gens);
  FPModule ideal = FPModule::ideal(ring, ideal_gens);
  std::vector<std::vector<Polynomial>> components{Ps(base, {"x"}), Ps(base, {"x + z", "y"}), Ps(base, {"x - z", "y"}),
                                                  Ps(base, {"x + 5*z", "y"}), Ps(base, {"x - 5*z", "y"})};
};

// k[x,y,z]/(x^2 - y^2, x^2 - z^2, xy, xz, yz) over Q.
struct FivePointScheme {
  RingRef base = make_ring(Field::rationals(), {"x", "y", "z"});
  QuotientRing ring{base, Ps(base, {"x^2 - y^2", "x^2 - z^2", "x*y", "x*z", "y*z"})};
};

inline FPModule residue_field(const QuotientRing& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.variable(i));
  return FPModule::cyclic(ring, vars);
}

}  // namespace jacal::fixtures

namespace jacal::fixtures {

// PlaneCurveTail's ring over A = k[y].
struct CurveOverLine : PlaneCurveTail {
  NormalizationData a = normalization_check(ring, {P(base, "y")});
};

// FivePointScheme over A = k.
struct PointsOverField : FivePointScheme {
  NormalizationData a = normalization_check(ring, {});
};

}  // namespace jacal::fixtures
