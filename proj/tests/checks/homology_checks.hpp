#pragma once

// Invariant checks for resolutions and Ext. Each returns an empty string on
// success and a description of the first violation otherwise.

#include <random>
#include <string>
#include <vector>

#include "../support.hpp"
#include "jacal/ext.hpp"
#include "jacal/koszul.hpp"
#include "jacal/resolution.hpp"

namespace jacal::checks {

// d_i d_{i+1} = 0 modulo I, every exactness certificate holds and is
// re-verified (syzygies of d_i lie in the image of d_{i+1}), and a
// resolution flagged minimal has no constant entries.
inline std::string resolution_certified(const FreeResolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    PolyMatrix comp = res.maps[i] * res.maps[i + 1];
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c)
        if (!res.ring.is_zero(comp(r, c))) return "d" + std::to_string(i + 1) + " d" + std::to_string(i + 2) + " != 0";
  }
  for (std::size_t i = 0; i < res.exact.size(); ++i) {
    if (!res.exact[i]) return "exactness not certified at step " + std::to_string(i + 1);
    Submodule image = Submodule::from_matrix(res.ring, res.maps[i + 1]);
    if (!image.contains_columns(syzygies(res.maps[i], res.ring)))
      return "kernel of d" + std::to_string(i + 1) + " exceeds the image of d" + std::to_string(i + 2);
  }
  if (res.minimal)
    for (const auto& d : res.maps)
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (d(r, c).has_constant_term()) return "minimal resolution has a constant entry";
  return {};
}

// Depth by Koszul homology on the variables: n - max{i : H_i != 0}.
inline int koszul_depth(const QuotientRing& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.variable(i));
  for (std::size_t i = ring.nvars(); i > 0; --i)
    if (!koszul_homology(vars, ring, i).is_zero()) return static_cast<int>(ring.nvars() - i);
  return static_cast<int>(ring.nvars());
}

// depth + pd = n, with depth matching the Koszul computation, and the
// resolution of R over the ambient ring certified.
inline std::string auslander_buchsbaum(const QuotientRing& ring) {
  auto dp = depth_and_pd(ring);
  if (dp.depth + dp.pd != static_cast<int>(ring.nvars())) return "depth + pd != n for " + ring.to_string();
  if (dp.depth != koszul_depth(ring)) return "Koszul depth disagrees for " + ring.to_string();
  QuotientRing ambient(ring.ambient());
  return resolution_certified(free_resolution(FPModule::cyclic(ambient, ring.defining_basis()), std::nullopt));
}

// The same module with one redundant generator e_g = sum c_i e_i and one
// redundant relation (a combination of the existing relations).
inline FPModule redundant_presentation(std::mt19937_64& rng, const FPModule& m) {
  const QuotientRing& ring = m.ring();
  const RingRef& base = ring.ambient();
  const PolyMatrix& p = m.presentation();
  std::size_t g = m.generators(), r = p.cols();
  PolyMatrix out(base, g + 1, r + 2);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = p(i, j);
  for (std::size_t j = 0; j < r; ++j) {
    Polynomial c = jacal::testing::random_polynomial(rng, base, 2, 1);
    for (std::size_t i = 0; i < g; ++i) out(i, r) += c * p(i, j);
  }
  for (std::size_t i = 0; i < g; ++i) out(i, r + 1) = -jacal::testing::random_polynomial(rng, base, 2, 1);
  out(g, r + 1) = Polynomial::constant(base, 1);
  return FPModule(ring, out);
}

// Ext^n(M, N) and Ext^n(M', N) for a redundant presentation M' of M have
// the same annihilator and the same action of each probe element.
inline std::string ext_presentation_independent(std::mt19937_64& rng, const FPModule& m, const FPModule& target,
                                                std::size_t n, const std::vector<Polynomial>& probes) {
  FPModule other = redundant_presentation(rng, m);
  auto a = ext_module(m.ring(), n, m, target);
  auto b = ext_module(m.ring(), n, other, target);
  if (!ideal_equal(a.annihilator(), b.annihilator()))
    return "Ext^" + std::to_string(n) + " annihilators differ for " + other.to_string();
  for (const auto& p : probes)
    if (a.acts_zero(p) != b.acts_zero(p)) return "action of " + p.to_string() + " differs on Ext^" + std::to_string(n);
  return {};
}

}  // namespace jacal::checks
