#include "jacal/resolution.hpp"

#include <numeric>

#include "jacal/error.hpp"

namespace jacal {

namespace {

bool composes_to_zero(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix ab = a * b;
  for (std::size_t r = 0; r < ab.rows(); ++r)
    for (std::size_t c = 0; c < ab.cols(); ++c)
      if (!ring.is_zero(ab(r, c))) return false;
  return true;
}

bool has_constant_entry(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).has_constant_term()) return true;
  return false;
}

}  // namespace

std::string FreeResolution::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    s += "d" + std::to_string(i + 1) + ": rank " + std::to_string(ranks[i + 1]) + " -> rank " +
         std::to_string(ranks[i]) + "\n";
    s += maps[i].to_string() + "\n";
  }
  if (maps.empty()) s += "free of rank " + std::to_string(ranks[0]) + "\n";
  return s;
}

FreeResolution free_resolution(const FPModule& module, std::optional<std::size_t> max_length) {
  const QuotientRing& ring = module.ring();
  if (!ring.is_polynomial_ring() && !max_length)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "a resolution over a quotient ring needs a length bound");

  FPModule m = prune_unit_pivots(module);
  const bool graded = m.is_homogeneous();
  FreeResolution res{ring, {}, {m.generators()}, std::nullopt, false, false, {}};
  std::vector<std::vector<int>> twists;
  if (graded) twists.push_back(*m.twists());

  auto push_map = [&](const PolyMatrix& full) -> bool {
    std::optional<std::vector<int>> row_twists;
    if (graded) row_twists = twists.back();
    auto kept = minimal_columns(ring, full, row_twists);
    if (kept.empty()) return false;
    PolyMatrix d = full.select_columns(kept);
    if (graded) {
      auto degs = column_degrees(d, twists.back());
      if (!degs) throw AlgebraError(AlgebraError::Kind::Internal, "syzygy of graded input is not homogeneous");
      twists.push_back(*degs);
    }
    if (!res.maps.empty()) {
      if (!composes_to_zero(ring, res.maps.back(), d))
        throw AlgebraError(AlgebraError::Kind::Internal, "resolution maps do not compose to zero");
      res.exact.push_back(Submodule::from_matrix(ring, d).contains_columns(full));
    }
    res.maps.push_back(std::move(d));
    res.ranks.push_back(kept.size());
    return true;
  };

  bool more = push_map(m.presentation());
  while (more && (!max_length || res.maps.size() < *max_length))
    more = push_map(syzygies(res.maps.back(), ring));
  if (!more) res.complete = true;
  if (max_length && res.maps.size() > *max_length) {
    res.maps.erase(res.maps.begin() + static_cast<long>(*max_length), res.maps.end());
    res.ranks.resize(*max_length + 1);
    if (graded) twists.resize(*max_length + 1);
    res.complete = false;
  }

  if (graded) {
    res.twists = twists;
    res.minimal = true;
    for (const auto& d : res.maps)
      if (has_constant_entry(d)) res.minimal = false;
  }
  return res;
}

DepthPd depth_and_pd(const FPModule& m) {
  if (!m.ring().is_polynomial_ring())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "depth and pd are computed over the ambient polynomial ring");
  if (!m.is_homogeneous()) throw AlgebraError(AlgebraError::Kind::NotHomogeneous, "depth needs homogeneous input");
  if (m.is_zero()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "depth of the zero module");
  FreeResolution res = free_resolution(m, std::nullopt);
  int pd = static_cast<int>(res.length());
  return {static_cast<int>(m.ring().nvars()) - pd, pd};
}

DepthPd depth_and_pd(const QuotientRing& ring) {
  if (!ring.is_homogeneous()) throw AlgebraError(AlgebraError::Kind::NotHomogeneous, "depth needs a homogeneous ring");
  if (!ring.dimension()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "depth of the zero ring");
  QuotientRing ambient(ring.ambient());
  return depth_and_pd(FPModule::cyclic(ambient, ring.defining_basis()));
}

bool same_image(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return Submodule::from_matrix(ring, a).contains_columns(b) && Submodule::from_matrix(ring, b).contains_columns(a);
}

bool same_image_up_to_basis(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) return false;
  if (a.rows() > 8) throw AlgebraError(AlgebraError::Kind::OutOfRange, "too many rows to search permutations");
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    PolyMatrix p(ring.ambient(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = a(perm[i], j);
    if (same_image(ring, p, b)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace jacal
