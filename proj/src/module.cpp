#include "jacal/module.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "jacal/error.hpp"

namespace jacal {

namespace {

PolyMatrix reduce_entries(const QuotientRing& ring, const PolyMatrix& m) {
  PolyMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ring.reduce(m(r, c));
  return out;
}

void for_each_monomial(std::size_t n, int degree, Monomial& m, std::size_t i, const auto& visit) {
  if (i + 1 >= n) {
    if (n == 0) {
      if (degree == 0) visit(m);
      return;
    }
    m.set(i, degree);
    visit(m);
    m.set(i, 0);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    m.set(i, e);
    for_each_monomial(n, degree - e, m, i + 1, visit);
  }
  m.set(i, 0);
}

}  // namespace

std::optional<std::vector<int>> infer_row_twists(const PolyMatrix& m, const std::vector<int>& hint) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!m(r, c).is_homogeneous()) return std::nullopt;
  std::vector<std::optional<int>> row_deg(rows), col_deg(cols);
  for (std::size_t root = 0; root < rows; ++root) {
    if (row_deg[root]) continue;
    row_deg[root] = hint.size() == rows ? hint[root] : 0;
    // Breadth-first over the bipartite graph of nonzero entries.
    std::deque<std::pair<bool, std::size_t>> queue{{true, root}};
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (m(idx, c).is_zero()) continue;
          int d = *row_deg[idx] + m(idx, c).total_degree();
          if (!col_deg[c]) {
            col_deg[c] = d;
            queue.push_back({false, c});
          } else if (*col_deg[c] != d) {
            return std::nullopt;
          }
        }
      } else {
        for (std::size_t r = 0; r < rows; ++r) {
          if (m(r, idx).is_zero()) continue;
          int d = *col_deg[idx] - m(r, idx).total_degree();
          if (!row_deg[r]) {
            row_deg[r] = d;
            queue.push_back({true, r});
          } else if (*row_deg[r] != d) {
            return std::nullopt;
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (auto& d : row_deg) out.push_back(*d);
  return out;
}

std::optional<std::vector<int>> column_degrees(const PolyMatrix& m, const std::vector<int>& row_twists) {
  std::vector<int> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::optional<int> deg;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Polynomial& e = m(r, c);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) return std::nullopt;
      int d = e.total_degree() + row_twists[r];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    out.push_back(deg.value_or(0));
  }
  return out;
}

// -------------------------------------------------------------------- FPModule

FPModule::FPModule(QuotientRing ring, PolyMatrix presentation, std::optional<std::vector<int>> twists)
    : ring_(std::move(ring)), presentation_(reduce_entries(ring_, presentation)) {
  require_same_ring(presentation.ring(), ring_.ambient());
  if (twists && twists->size() != presentation_.rows())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "twist count differs from generator count");
  if (ring_.is_homogeneous()) {
    auto inferred = infer_row_twists(presentation_, twists.value_or(std::vector<int>{}));
    if (twists && inferred && *inferred != *twists) inferred.reset();
    twists_ = inferred;
  }
  relations_ = std::make_shared<const Submodule>(Submodule::from_matrix(ring_, presentation_));
}

FPModule FPModule::free(const QuotientRing& ring, std::size_t rank) {
  return FPModule(ring, PolyMatrix(ring.ambient(), rank, 0), std::vector<int>(rank, 0));
}

FPModule FPModule::cyclic(const QuotientRing& ring, const std::vector<Polynomial>& gens) {
  return FPModule(ring, PolyMatrix::from_rows(ring.ambient(), {gens}), std::vector<int>{0});
}

FPModule FPModule::ideal(const QuotientRing& ring, const std::vector<Polynomial>& gens) {
  PolyMatrix row = PolyMatrix::from_rows(ring.ambient(), {gens});
  std::optional<std::vector<int>> twists;
  if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous() && !g.is_zero(); })) {
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.total_degree());
    twists = degs;
  }
  return FPModule(ring, syzygies(row, ring), twists);
}

bool FPModule::is_zero() const {
  FreeModule space(ring_.ambient(), generators());
  for (std::size_t k = 0; k < generators(); ++k)
    if (!relations_->contains(space.to_column(space.unit(static_cast<std::uint32_t>(k))))) return false;
  return true;
}

std::string FPModule::to_string() const {
  if (presentation_.cols() == 0) return "free of rank " + std::to_string(generators());
  return "coker " + presentation_.to_string();
}

// ----------------------------------------------------------------- Subquotient

Subquotient::Subquotient(QuotientRing ring, PolyMatrix k, PolyMatrix b, std::optional<std::vector<int>> twists)
    : ring_(std::move(ring)), k_(reduce_entries(ring_, k)), b_(reduce_entries(ring_, b)), twists_(std::move(twists)) {
  require_same_ring(k.ring(), ring_.ambient());
  require_same_ring(b.ring(), ring_.ambient());
  if (k_.rows() != b_.rows())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "subquotient matrices of different heights");
  if (twists_ && twists_->size() != k_.rows())
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "twist count differs from rank");
  cycles_ = std::make_shared<const Submodule>(Submodule::from_matrix(ring_, k_));
  boundary_ = std::make_shared<const Submodule>(Submodule::from_matrix(ring_, b_));
  if (!cycles_->contains_columns(b_))
    throw AlgebraError(AlgebraError::Kind::Internal, "boundary not contained in the cycles");
}

bool Subquotient::is_zero() const { return boundary_->contains_columns(k_); }

bool Subquotient::acts_zero(const Polynomial& r) const {
  require_same_ring(r.ring(), ring_.ambient());
  if (ring_.is_zero(r)) return true;
  for (std::size_t c = 0; c < k_.cols(); ++c) {
    auto col = k_.column(c);
    for (auto& e : col) e = e * r;
    if (!boundary_->contains(col)) return false;
  }
  return true;
}

bool Subquotient::is_zero_class(const std::vector<Polynomial>& column) const {
  if (!cycles_->contains(column))
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "element is not a cycle");
  return boundary_->contains(column);
}

Ideal Subquotient::annihilator() const {
  std::vector<Ideal> parts;
  for (std::size_t c = 0; c < k_.cols(); ++c) {
    auto col = k_.column(c);
    if (boundary_->contains(col)) continue;
    PolyMatrix stacked = PolyMatrix::from_columns(ring_.ambient(), rank(), {col}).concat_columns(b_);
    PolyMatrix syz = syzygies(stacked, ring_);
    parts.emplace_back(ring_, syz.row(0));
  }
  if (parts.empty()) return Ideal::unit(ring_);
  return ideal_intersect(parts);
}

std::size_t Subquotient::graded_dimension(int degree) const {
  if (!twists_ || !ring_.is_homogeneous())
    throw AlgebraError(AlgebraError::Kind::NotHomogeneous, "graded dimension needs graded data");
  return standard_monomial_count(boundary_->groebner(), *twists_, degree) -
         standard_monomial_count(cycles_->groebner(), *twists_, degree);
}

std::string Subquotient::to_string() const {
  return "subquotient of rank " + std::to_string(rank()) + "\nK =\n" + k_.to_string() + "\nB =\n" +
         (b_.cols() ? b_.to_string() : std::string("0"));
}

bool acts_zero(const Polynomial& r, const Subquotient& e) { return e.acts_zero(r); }
Ideal module_annihilator(const Subquotient& e) { return e.annihilator(); }

Subquotient as_subquotient(const FPModule& m) {
  return Subquotient(m.ring(), PolyMatrix::identity(m.ring().ambient(), m.generators()), m.presentation(),
                     m.twists());
}

Ideal module_annihilator(const FPModule& m) { return as_subquotient(m).annihilator(); }

std::size_t standard_monomial_count(const GroebnerBasis& gb, const std::vector<int>& twists, int degree) {
  const std::size_t n = gb.space().ring()->nvars();
  std::size_t count = 0;
  for (std::uint32_t c = 0; c < twists.size(); ++c) {
    int d = degree - twists[c];
    if (d < 0) continue;
    std::vector<Monomial> leads;
    for (const auto& g : gb.reduced())
      if (g.lead().component == c) leads.push_back(g.lead().monomial);
    Monomial m(n);
    for_each_monomial(n, d, m, 0, [&](const Monomial& x) {
      for (const auto& l : leads)
        if (l.divides(x)) return;
      ++count;
    });
  }
  return count;
}

FPModule prune_unit_pivots(const FPModule& m) {
  const QuotientRing& ring = m.ring();
  PolyMatrix p = m.presentation();
  std::vector<std::size_t> rows(p.rows());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<int> twists = m.twists().value_or(std::vector<int>{});

  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t c = 0; c < p.cols() && !pivot; ++c)
      for (std::size_t r = 0; r < p.rows() && !pivot; ++r)
        if (p(r, c).is_unit_constant()) pivot = {r, c};
    if (!pivot) break;
    auto [pr, pc] = *pivot;
    Scalar inv = p(pr, pc).lead_coefficient().inverse();
    PolyMatrix next(p.ring(), p.rows() - 1, p.cols() - 1);
    for (std::size_t r = 0, nr = 0; r < p.rows(); ++r) {
      if (r == pr) continue;
      for (std::size_t c = 0, nc = 0; c < p.cols(); ++c) {
        if (c == pc) continue;
        next(nr, nc++) = ring.reduce(p(r, c) - (p(pr, c) * p(r, pc)).scaled(inv));
      }
      ++nr;
    }
    p = std::move(next);
    rows.erase(rows.begin() + static_cast<long>(pr));
    if (!twists.empty()) twists.erase(twists.begin() + static_cast<long>(pr));
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < p.rows() && zero; ++r) zero = p(r, c).is_zero();
    if (!zero) nonzero.push_back(c);
  }
  p = p.select_columns(nonzero);
  std::optional<std::vector<int>> t;
  if (m.twists()) t = twists;
  return FPModule(ring, p, t);
}

std::vector<std::size_t> minimal_columns(const QuotientRing& ring, const PolyMatrix& m,
                                         const std::optional<std::vector<int>>& row_twists) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  if (row_twists) {
    if (auto degs = column_degrees(m, *row_twists)) {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return (*degs)[a] < (*degs)[b]; });
    }
  }
  FreeModule space(ring.ambient(), m.rows());
  GroebnerBuilder builder(space);
  for (const auto& f : ring.defining_basis())
    for (std::size_t r = 0; r < m.rows(); ++r) builder.add(space.from_polynomial(f, static_cast<std::uint32_t>(r)));
  std::vector<std::size_t> kept;
  for (std::size_t c : order) {
    ModuleVector v = space.from_column(m.column(c));
    builder.complete();
    if (builder.normal_form(v).is_zero()) continue;
    kept.push_back(c);
    builder.add(v);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace jacal
