#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacal/ext.hpp"
#include "jacal/koszul.hpp"
#include "jacal/normalization.hpp"

namespace jacal {

/// Omega_{R/k}: generators dx_1..dx_n, one relation column per declared
/// defining generator f with entries df/dx_i; unit pivots pruned.
FPModule kaehler_presentation(const QuotientRing& ring);
/// Omega_{R/A}: as above plus the columns d(theta_j). A must be certified.
FPModule kaehler_presentation(const QuotientRing& ring, const NormalizationData& a);

/// Ideal of (g-j)-minors of the presentation; (1) when j >= g and (0) when
/// g - j exceeds the number of relations.
Ideal fitting_ideal(const FPModule& m, std::size_t j);

/// Fitt_{dim R}(Omega_{R/k}).
Ideal jacobian_ideal(const QuotientRing& ring);

/// Fitt_0(Omega_{R/A}).
Ideal kaehler_different(const QuotientRing& ring, const NormalizationData& a);

/// R (x)_A R = k[x,x']/(I + I' + (theta - theta')) with the multiplication
/// map mu sending x' to x.
struct EnvelopingPresentation {
  QuotientRing base;
  DoubledRing doubled;
  QuotientRing ring;
  /// The x_i - x_i' that are nonzero in the enveloping ring.
  std::vector<Polynomial> kernel_generators;
  /// Every defining generator of the enveloping ring maps into I.
  bool mu_well_defined = false;

  /// mu(f) reduced into R.
  Polynomial mu(const Polynomial& f) const;
};

EnvelopingPresentation enveloping(const QuotientRing& ring, const NormalizationData& a);

/// mu((0 : ker mu)).
Ideal noether_different(const QuotientRing& ring, const NormalizationData& a);

/// Tor^A_i(R,R) = 0 for 1 <= i <= d, which makes the degree-zero derived
/// Noether different equal to the Noether different.
struct TorCertificate {
  std::vector<bool> vanishing;  // entry i-1 for Tor_i
  bool certified() const;
};
TorCertificate tor_vanishing(const NormalizationData& a);
bool tor_vanishing_certifies_equality(const QuotientRing& ring, const NormalizationData& a);

/// "xi0 = noether" when certified, else "xi0 <= noether".
std::string xi0_status(bool certified);

struct Probe {
  std::size_t n;
  FPModule m;
  FPModule target;
};

struct RefuteResult {
  bool refuted = false;
  /// Index of the first probe on which z acts nontrivially.
  std::optional<std::size_t> witness;
  std::string to_string() const { return refuted ? "refuted" : "inconclusive"; }
};

/// z is refuted as a member of the derived different when it acts
/// nontrivially on Ext^n(M, N) for some probe. Never affirms membership.
RefuteResult derived_different_refute(const Polynomial& z, const QuotientRing& ring, const std::vector<Probe>& probes);

/// Every generator of each ideal lies in the radical of the other.
bool radical_agreement(const Ideal& a, const Ideal& b);

struct Smoothness {
  bool smooth;
  Ideal witness;  // the Jacobian ideal
};
Smoothness smoothness_criterion(const QuotientRing& ring);

}  // namespace jacal
