#include "jacal/harness.hpp"

#include <algorithm>
#include <sstream>

#include "jacal/error.hpp"
#include "jacal/ext.hpp"
#include "jacal/resolution.hpp"

namespace jacal {

FPModule residue_module(const QuotientRing& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.variable(i));
  return FPModule::cyclic(ring, vars);
}

ProbeCorpus::ProbeCorpus(QuotientRing ring, std::vector<ProbePair> named) : ring_(std::move(ring)) {
  FPModule k = residue_module(ring_);
  pairs_.push_back({"(k,k)", k, k});
  pairs_.push_back({"(R,k)", FPModule::free(ring_, 1), k});
  for (auto& p : named) {
    require_same_ring(ring_, p.m.ring());
    require_same_ring(ring_, p.target.ring());
    pairs_.push_back(std::move(p));
  }
}

std::string ExponentResult::to_string() const {
  return s ? std::to_string(*s) : "exceeded(" + std::to_string(s_max) + ")";
}

ExponentResult annihilation_exponent(const QuotientRing& ring, const Ideal& j, const ProbeCorpus& corpus, int s_max) {
  require_same_ring(ring, corpus.ring());
  require_same_ring(ring, j.ring());
  if (j.is_unit()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "the ideal must be proper");
  auto d = ring.dimension();
  if (!d) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "the ring is zero");
  ExponentResult out;
  out.s_max = s_max;
  out.ext_degree = static_cast<std::size_t>(*d) + 1;
  std::vector<Subquotient> exts;
  for (const auto& p : corpus.pairs()) {
    Subquotient e = ext_module(ring, out.ext_degree, p.m, p.target);
    if (!e.is_zero()) exts.push_back(std::move(e));
  }
  Ideal power = j;
  for (int s = 1; s <= s_max; ++s) {
    if (s > 1) power = Ideal(ring, ideal_product(power, j).canonical_generators());
    auto gens = power.canonical_generators();
    bool kills = std::all_of(exts.begin(), exts.end(), [&](const Subquotient& e) {
      return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return e.acts_zero(g); });
    });
    if (kills) {
      out.s = s;
      return out;
    }
  }
  return out;
}

bool decomposition_check(const DecompositionClaim& claim) {
  if (claim.components.empty()) return claim.target.is_unit();
  for (const auto& c : claim.components) require_same_ring(claim.target.ring(), c.ring());
  Ideal meet = ideal_intersect(claim.components);
  return meet.contains(claim.target) && claim.target.contains(meet);
}

std::string HypothesisReport::to_string() const {
  std::ostringstream out;
  out << "decomposition: " << (decomposition ? "verified" : "FAILED") << "\n";
  out << "dimensions of R/p:";
  for (int d : prime_dimensions) out << " " << d;
  out << "\n";
  out << "equidimensional: " << (equidimensional ? "yes" : "NO") << "\n";
  out << "dim R: " << (dimension ? std::to_string(*dimension) : "empty") << "\n";
  out << "depth R: " << (depth ? std::to_string(*depth) : "not computed") << "\n";
  out << "2 depth >= dim: " << (depth_condition ? (*depth_condition ? "holds" : "FAILS") : "not checked") << "\n";
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

HypothesisReport theorem2_hypotheses(const QuotientRing& ring, const DecompositionClaim& claim,
                                     const std::vector<Ideal>& primes) {
  if (primes.empty()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "empty prime list");
  require_same_ring(ring, claim.target.ring());
  HypothesisReport r;
  r.decomposition = decomposition_check(claim);
  for (const auto& p : primes) {
    require_same_ring(ring, p.ring());
    auto d = krull_dimension(QuotientRing(ring.ambient(), p.lifted_generators()));
    r.prime_dimensions.push_back(d.value_or(-1));
  }
  r.equidimensional = std::all_of(r.prime_dimensions.begin(), r.prime_dimensions.end(),
                                  [&](int d) { return d == r.prime_dimensions.front(); });
  r.dimension = ring.dimension();
  if (ring.is_homogeneous() && r.dimension) {
    r.depth = depth_and_pd(ring).depth;
    r.depth_condition = 2 * *r.depth >= *r.dimension;
  } else {
    r.notes.push_back("depth not computed: the ring is not graded");
  }
  r.notes.push_back("equidimensionality is relative to the supplied primes");
  r.notes.push_back("localized depth conditions not checked");
  r.notes.push_back("hypothesis sampled, not certified");
  return r;
}

std::string CorpusLine::to_string() const {
  return std::string(pass ? "PASS " : "FAIL ") + fixture + "." + assertion + " expected=" + expected + " got=" + got;
}

bool CorpusReport::all_passed() const {
  return !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const CorpusLine& l) { return l.pass; });
}

std::string CorpusReport::to_string() const {
  std::ostringstream out;
  for (const auto& l : lines) out << l.to_string() << "\n";
  for (const auto& n : notes) out << n << "\n";
  return out.str();
}

}  // namespace jacal
