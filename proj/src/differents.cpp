#include "jacal/differents.hpp"

#include <algorithm>

#include "jacal/error.hpp"

namespace jacal {

namespace {

PolyMatrix jacobian_columns(const RingRef& base, const std::vector<Polynomial>& fs) {
  PolyMatrix m(base, base->nvars(), fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (std::size_t i = 0; i < base->nvars(); ++i) m(i, j) = partial_derivative(fs[j], i);
  return m;
}

FPModule omega(const QuotientRing& ring, const std::vector<Polynomial>& extra) {
  const RingRef& base = ring.ambient();
  PolyMatrix m = jacobian_columns(base, ring.defining_generators()).concat_columns(jacobian_columns(base, extra));
  return prune_unit_pivots(FPModule(ring, m, std::vector<int>(base->nvars(), 1)));
}

}  // namespace

FPModule kaehler_presentation(const QuotientRing& ring) { return omega(ring, {}); }

FPModule kaehler_presentation(const QuotientRing& ring, const NormalizationData& a) {
  a.require_certified();
  require_same_ring(ring, a.ring);
  return omega(ring, a.theta);
}

Ideal fitting_ideal(const FPModule& m, std::size_t j) {
  const QuotientRing& ring = m.ring();
  const std::size_t g = m.generators();
  if (j >= g) return Ideal::unit(ring);
  const std::size_t t = g - j;
  if (t > m.presentation().cols()) return Ideal::zero(ring);
  std::vector<Polynomial> minors;
  for (auto& p : matrix_minors(m.presentation(), t)) {
    Polynomial r = ring.reduce(p);
    if (!r.is_zero() && std::find(minors.begin(), minors.end(), r) == minors.end()) minors.push_back(std::move(r));
  }
  return Ideal(ring, std::move(minors));
}

Ideal jacobian_ideal(const QuotientRing& ring) {
  auto d = ring.dimension();
  if (!d) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "Jacobian ideal of the zero ring");
  return fitting_ideal(kaehler_presentation(ring), static_cast<std::size_t>(*d));
}

Ideal kaehler_different(const QuotientRing& ring, const NormalizationData& a) {
  return fitting_ideal(kaehler_presentation(ring, a), 0);
}

Polynomial EnvelopingPresentation::mu(const Polynomial& f) const { return base.reduce(doubled.multiply(f)); }

EnvelopingPresentation enveloping(const QuotientRing& ring, const NormalizationData& a) {
  a.require_certified();
  require_same_ring(ring, a.ring);
  DoubledRing doubled = double_variables(ring.ambient());
  std::vector<Polynomial> gens;
  for (const auto& f : ring.defining_basis()) gens.push_back(doubled.left(f));
  for (const auto& f : ring.defining_basis()) gens.push_back(doubled.right(f));
  for (const auto& t : a.theta) gens.push_back(doubled.left(t) - doubled.right(t));
  EnvelopingPresentation env{ring, doubled, QuotientRing(doubled.ring, gens), {}, false};
  env.mu_well_defined = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return env.mu(g).is_zero(); });
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    Polynomial diff = env.ring.reduce(Polynomial::variable(doubled.ring, i) -
                                      Polynomial::variable(doubled.ring, i + ring.nvars()));
    if (!diff.is_zero()) env.kernel_generators.push_back(diff);
  }
  return env;
}

Ideal noether_different(const QuotientRing& ring, const NormalizationData& a) {
  EnvelopingPresentation env = enveloping(ring, a);
  if (!env.mu_well_defined) throw AlgebraError(AlgebraError::Kind::Internal, "multiplication map is not well defined");
  Ideal annihilator = ideal_colon(Ideal::zero(env.ring), Ideal(env.ring, env.kernel_generators));
  std::vector<Polynomial> images;
  for (const auto& g : annihilator.basis()) {
    Polynomial r = env.mu(g);
    if (!r.is_zero() && std::find(images.begin(), images.end(), r) == images.end()) images.push_back(std::move(r));
  }
  return Ideal(ring, std::move(images));
}

bool TorCertificate::certified() const {
  return std::all_of(vanishing.begin(), vanishing.end(), [](bool v) { return v; });
}

TorCertificate tor_vanishing(const NormalizationData& a) {
  a.require_certified();
  TorCertificate cert;
  for (std::size_t i = 1; i <= a.size(); ++i) cert.vanishing.push_back(tor_over_normalization(a, i).is_zero());
  return cert;
}

bool tor_vanishing_certifies_equality(const QuotientRing& ring, const NormalizationData& a) {
  require_same_ring(ring, a.ring);
  return tor_vanishing(a).certified();
}

std::string xi0_status(bool certified) { return certified ? "xi0 = noether" : "xi0 <= noether"; }

RefuteResult derived_different_refute(const Polynomial& z, const QuotientRing& ring, const std::vector<Probe>& probes) {
  RefuteResult out;
  if (ring.is_zero(z)) return out;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Probe& p = probes[k];
    if (!ext_module(ring, p.n, p.m, p.target).acts_zero(z)) {
      out.refuted = true;
      out.witness = k;
      return out;
    }
  }
  return out;
}

bool radical_agreement(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto inside = [](const Ideal& x, const Ideal& y) {
    return std::all_of(x.generators().begin(), x.generators().end(),
                       [&](const Polynomial& f) { return radical_member(f, y); });
  };
  return inside(a, b) && inside(b, a);
}

Smoothness smoothness_criterion(const QuotientRing& ring) {
  Ideal jac = jacobian_ideal(ring);
  return {jac.is_unit(), jac};
}

}  // namespace jacal
