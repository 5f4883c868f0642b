#include "jacal/ext.hpp"

#include "jacal/error.hpp"

namespace jacal {

PolyMatrix transpose_on_copies(const PolyMatrix& d, std::size_t g) {
  PolyMatrix out(d.ring(), d.cols() * g, d.rows() * g);
  for (std::size_t j = 0; j < d.rows(); ++j)
    for (std::size_t k = 0; k < d.cols(); ++k)
      for (std::size_t i = 0; i < g; ++i) out(k * g + i, j * g + i) = d(j, k);
  return out;
}

PolyMatrix block_diagonal(const PolyMatrix& p, std::size_t count) {
  PolyMatrix out(p.ring(), p.rows() * count, p.cols() * count);
  for (std::size_t b = 0; b < count; ++b)
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out(b * p.rows() + r, b * p.cols() + c) = p(r, c);
  return out;
}

HomComplex hom_complex(const FreeResolution& f, const FPModule& n) {
  require_same_ring(f.ring, n.ring());
  HomComplex h{f.ring, n, f.ranks, {}};
  for (const auto& d : f.maps) h.maps.push_back(transpose_on_copies(d, n.generators()));
  return h;
}

std::vector<PolyMatrix> HomComplex::display_maps() const {
  if (target.generators() != 1) return maps;
  Ideal relations(ring, target.presentation().row(0));
  std::vector<PolyMatrix> out;
  for (const auto& m : maps) {
    PolyMatrix r(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = relations.normal_form(m(i, j));
    out.push_back(std::move(r));
  }
  return out;
}

std::string HomComplex::to_string() const {
  std::string s;
  auto shown = display_maps();
  for (std::size_t i = 0; i < shown.size(); ++i) {
    s += "Hom(F" + std::to_string(i) + ",N) -> Hom(F" + std::to_string(i + 1) + ",N)\n";
    s += shown[i].to_string() + "\n";
  }
  return s;
}

Subquotient ext_from_resolution(const FreeResolution& f, std::size_t n, const FPModule& target) {
  require_same_ring(f.ring, target.ring());
  const QuotientRing& ring = f.ring;
  const RingRef& k = ring.ambient();
  if (n >= f.ranks.size()) {
    if (!f.complete) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "resolution too short for this Ext");
    return Subquotient(ring, PolyMatrix(k, 0, 0), PolyMatrix(k, 0, 0), std::vector<int>{});
  }
  if (n + 1 > f.maps.size() && !f.complete)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "resolution too short for this Ext");

  const std::size_t g = target.generators();
  const PolyMatrix& p = target.presentation();
  const std::size_t rank_n = f.ranks[n];
  const std::size_t width = rank_n * g;

  PolyMatrix cycles = block_diagonal(p, rank_n);
  if (n < f.maps.size()) {
    const std::size_t rank_next = f.ranks[n + 1];
    PolyMatrix phi = transpose_on_copies(f.maps[n], g);
    PolyMatrix stacked = phi.concat_columns(block_diagonal(p, rank_next));
    PolyMatrix syz = syzygies(stacked, ring);
    PolyMatrix projected(k, width, syz.cols());
    for (std::size_t r = 0; r < width; ++r)
      for (std::size_t c = 0; c < syz.cols(); ++c) projected(r, c) = syz(r, c);
    cycles = projected.concat_columns(cycles);
  } else {
    cycles = PolyMatrix::identity(k, width).concat_columns(cycles);
  }

  PolyMatrix boundary = block_diagonal(p, rank_n);
  if (n >= 1) boundary = transpose_on_copies(f.maps[n - 1], g).concat_columns(boundary);

  std::optional<std::vector<int>> twists;
  if (f.twists && target.twists()) {
    std::vector<int> t;
    for (int b : (*f.twists)[n])
      for (int a : *target.twists()) t.push_back(a - b);
    twists = t;
  }
  return Subquotient(ring, cycles, boundary, twists);
}

Subquotient ext_module(const QuotientRing& ring, std::size_t n, const FPModule& m, const FPModule& target) {
  require_same_ring(ring, m.ring());
  require_same_ring(ring, target.ring());
  return ext_from_resolution(free_resolution(m, n + 1), n, target);
}

}  // namespace jacal
