#include "jacal/normalization.hpp"

#include <algorithm>
#include <numeric>

#include "jacal/error.hpp"

namespace jacal {

void NormalizationData::require_certified() const {
  if (!certified()) throw AlgebraError(AlgebraError::Kind::Uncertified, "normalization not certified: " + *failure);
}

std::string NormalizationData::to_string() const {
  std::string s = "k[";
  for (std::size_t j = 0; j < theta.size(); ++j) s += (j ? ", " : "") + theta[j].to_string();
  s += "] -> R: ";
  if (!certified()) return s + "not finite (" + *failure + ")";
  s += "finite, leading pure powers";
  const auto& vars = ring.ambient()->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : " ") + vars[i] + "^" + std::to_string(pure_powers[i]);
  return s;
}

DoubledRing double_variables(const RingRef& base) {
  std::vector<std::string> names = base->variables();
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = base->variables()[i] + "p";
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "p";
    names.push_back(name);
  }
  return {base, make_ring(base->field(), names, MonomialOrder::grevlex())};
}

Polynomial DoubledRing::left(const Polynomial& f) const {
  std::vector<std::size_t> map(base->nvars());
  std::iota(map.begin(), map.end(), 0);
  return remap(f, ring, map);
}

Polynomial DoubledRing::right(const Polynomial& f) const {
  std::vector<std::size_t> map(base->nvars());
  std::iota(map.begin(), map.end(), base->nvars());
  return remap(f, ring, map);
}

Polynomial DoubledRing::multiply(const Polynomial& f) const {
  std::vector<std::size_t> map(ring->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i % base->nvars();
  return remap(f, base, map);
}

NormalizationData normalization_check(const QuotientRing& ring, std::vector<Polynomial> theta) {
  const RingRef& base = ring.ambient();
  for (const auto& t : theta) require_same_ring(t.ring(), base);
  const std::size_t n = base->nvars(), d = theta.size();
  NormalizationData out{ring, std::move(theta), std::vector<int>(n, 0), std::nullopt, {}};
  if (ring.dimension() && static_cast<std::size_t>(*ring.dimension()) != d)
    out.notes.push_back("theta has " + std::to_string(d) + " entries but dim R = " + std::to_string(*ring.dimension()));

  std::vector<std::string> names = base->variables();
  for (std::size_t j = 0; j < d; ++j) {
    std::string name = "_t" + std::to_string(j);
    while (base->index_of(name) >= 0) name += "_";
    names.push_back(name);
  }
  RingRef big = make_ring(base->field(), names, d ? MonomialOrder::elimination(n) : MonomialOrder::grevlex());
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> gens;
  for (const auto& f : ring.defining_basis()) gens.push_back(remap(f, big, map));
  for (std::size_t j = 0; j < d; ++j)
    gens.push_back(remap(out.theta[j], big, map) - Polynomial::variable(big, n + j));
  Ideal ideal(QuotientRing(big), gens);
  for (const auto& g : ideal.basis()) {
    const Monomial& lead = g.lead_monomial();
    if (lead.is_one()) {
      std::fill(out.pure_powers.begin(), out.pure_powers.end(), 0);
      break;
    }
    std::uint32_t s = lead.support();
    if ((s & (s - 1)) != 0) continue;
    auto i = static_cast<std::size_t>(__builtin_ctz(s));
    if (i < n && (out.pure_powers[i] == 0 || lead[i] < out.pure_powers[i])) out.pure_powers[i] = lead[i];
  }
  if (ideal.is_unit()) {
    out.failure = "the ring is zero";
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (out.pure_powers[i] == 0) {
      out.failure = base->variables()[i] + " has no pure power leading term";
      break;
    }
  return out;
}

}  // namespace jacal
