#include "jacal/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jacal/error.hpp"

namespace jacal {

namespace {

std::vector<ModuleVector> to_vectors(const FreeModule& space, const std::vector<Polynomial>& polys) {
  std::vector<ModuleVector> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(space.from_polynomial(p));
  return out;
}

Polynomial to_polynomial(const FreeModule& space, const ModuleVector& v) { return space.to_column(v)[0]; }

std::vector<Polynomial> reduced_polys(const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& v : gb.reduced()) out.push_back(to_polynomial(gb.space(), v));
  return out;
}

GroebnerBasis ideal_basis(const RingRef& ring, const std::vector<Polynomial>& gens) {
  FreeModule space(ring, 1);
  return GroebnerBasis::compute(space, to_vectors(space, gens));
}

std::string fresh_name(const RingRef& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; ring->index_of(name) >= 0; ++k) name = stem + std::to_string(k);
  return name;
}

/// Largest subset of variables containing no support of a leading monomial.
int max_independent_set(std::size_t n, const std::vector<std::uint32_t>& supports) {
  auto independent = [&](std::uint32_t s) {
    for (auto m : supports)
      if ((m & ~s) == 0) return false;
    return true;
  };
  for (int k = static_cast<int>(n); k > 0; --k) {
    std::uint32_t s = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (s < limit) {
      if (independent(s)) return k;
      std::uint32_t c = s & (~s + 1);
      std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return 0;
}

/// Generators of J ∩ K in the polynomial ring (no defining ideal).
std::vector<Polynomial> intersect_generators(const RingRef& ring, const std::vector<Polynomial>& a,
                                             const std::vector<Polynomial>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::string> names{fresh_name(ring, "_t")};
  for (const auto& v : ring->variables()) names.push_back(v);
  RingRef big = make_ring(ring->field(), names, MonomialOrder::elimination(1));
  std::vector<std::size_t> map(ring->nvars());
  std::iota(map.begin(), map.end(), 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * remap(f, big, map));
  for (const auto& f : b) gens.push_back(one_minus_t * remap(f, big, map));
  std::vector<std::size_t> keep(ring->nvars());
  std::iota(keep.begin(), keep.end(), 1);
  auto eliminated = eliminate_generators(gens, keep);
  std::vector<std::size_t> back(big->nvars(), 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const auto& f : eliminated) out.push_back(remap(f, ring, back));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- QuotientRing

struct QuotientRing::Data {
  RingRef ambient;
  std::vector<Polynomial> defining;
  GroebnerBasis gb;
  std::vector<Polynomial> basis;
  std::optional<int> dimension;
  bool homogeneous;
};

QuotientRing::QuotientRing(RingRef ambient, std::vector<Polynomial> defining) {
  if (!ambient) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "null ring");
  for (const auto& f : defining) require_same_ring(f.ring(), ambient);
  GroebnerBasis gb = ideal_basis(ambient, defining);
  auto basis = reduced_polys(gb);
  bool homogeneous = std::all_of(basis.begin(), basis.end(), [](const Polynomial& f) { return f.is_homogeneous(); });
  auto data = std::make_shared<Data>(Data{ambient, std::move(defining), gb, std::move(basis), std::nullopt, homogeneous});
  data_ = data;
  data->dimension = krull_dimension(*this);
}

const RingRef& QuotientRing::ambient() const { return data_->ambient; }
const std::vector<Polynomial>& QuotientRing::defining_generators() const { return data_->defining; }
const std::vector<Polynomial>& QuotientRing::defining_basis() const { return data_->basis; }
const GroebnerBasis& QuotientRing::defining_groebner() const { return data_->gb; }
bool QuotientRing::is_homogeneous() const { return data_->homogeneous; }
std::optional<int> QuotientRing::dimension() const { return data_->dimension; }

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  require_same_ring(f.ring(), ambient());
  if (is_polynomial_ring()) return f;
  const FreeModule& space = data_->gb.space();
  return to_polynomial(space, data_->gb.normal_form(space.from_polynomial(f)));
}

std::vector<std::string> QuotientRing::characteristic_notes() const {
  std::vector<std::string> notes;
  const std::uint32_t p = field().characteristic();
  if (p == 0) return notes;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t g = 0; g < data_->defining.size(); ++g) {
    for (const auto& t : data_->defining[g].terms()) {
      for (std::size_t i = 0; i < nvars(); ++i) {
        int e = t.monomial[i];
        if (e <= 0 || e % static_cast<int>(p) != 0 || !seen.insert({g, i}).second) continue;
        notes.push_back("exponent " + std::to_string(e) + " of " + ambient()->variables()[i] +
                        " in " + data_->defining[g].to_string() + " is divisible by the characteristic " +
                        std::to_string(p));
      }
    }
  }
  return notes;
}

std::string QuotientRing::to_string() const {
  std::string s = ambient()->to_string();
  if (data_->defining.empty()) return s;
  s += " / (";
  for (std::size_t i = 0; i < data_->defining.size(); ++i) {
    if (i) s += ", ";
    s += data_->defining[i].to_string();
  }
  return s + ")";
}

bool operator==(const QuotientRing& a, const QuotientRing& b) {
  if (a.data_ == b.data_) return true;
  return same_ring(a.ambient(), b.ambient()) && a.defining_basis() == b.defining_basis();
}

void require_same_ring(const QuotientRing& a, const QuotientRing& b) {
  if (!(a == b))
    throw AlgebraError(AlgebraError::Kind::RingMismatch, "ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

// ----------------------------------------------------------------------- Ideal

Ideal::Ideal(QuotientRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), gb_(ideal_basis(ring_.ambient(), {})) {
  for (const auto& f : generators_) require_same_ring(f.ring(), ring_.ambient());
  gb_ = ideal_basis(ring_.ambient(), lifted_generators());
  basis_polys_ = std::make_shared<const std::vector<Polynomial>>(reduced_polys(gb_));
}

std::vector<Polynomial> Ideal::lifted_generators() const {
  std::vector<Polynomial> out = generators_;
  for (const auto& f : ring_.defining_basis()) out.push_back(f);
  return out;
}

std::vector<Polynomial> Ideal::canonical_generators() const {
  if (is_unit()) return {ring_.constant(1)};
  std::vector<Polynomial> out;
  for (const auto& g : basis()) {
    Polynomial r = ring_.reduce(g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_.ambient());
  const FreeModule& space = gb_.space();
  return to_polynomial(space, gb_.normal_form(space.from_polynomial(f)));
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& f) { return contains(f); });
}

bool Ideal::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const Polynomial& f) { return ring_.is_zero(f); });
}

std::string Ideal::to_string() const {
  auto gens = canonical_generators();
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s + ")";
}

// ------------------------------------------------------------------- Submodule

Submodule::Submodule(QuotientRing ring, std::size_t rank, std::vector<std::vector<Polynomial>> columns)
    : ring_(std::move(ring)), rank_(rank), columns_(std::move(columns)),
      gb_(GroebnerBasis::compute(FreeModule(ring_.ambient(), rank_), {})) {
  FreeModule space(ring_.ambient(), rank_);
  std::vector<ModuleVector> gens;
  for (const auto& c : columns_) {
    if (c.size() != rank_) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "column length differs from rank");
    gens.push_back(space.from_column(c));
  }
  for (const auto& f : ring_.defining_basis())
    for (std::size_t k = 0; k < rank_; ++k) gens.push_back(space.from_polynomial(f, static_cast<std::uint32_t>(k)));
  gb_ = GroebnerBasis::compute(space, std::move(gens));
}

Submodule Submodule::from_matrix(const QuotientRing& ring, const PolyMatrix& m) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Submodule(ring, m.rows(), std::move(cols));
}

std::vector<Polynomial> Submodule::normal_form(const std::vector<Polynomial>& column) const {
  const FreeModule& space = gb_.space();
  return space.to_column(gb_.normal_form(space.from_column(column)));
}

bool Submodule::contains(const std::vector<Polynomial>& column) const {
  return gb_.contains(gb_.space().from_column(column));
}

bool Submodule::contains(const Submodule& other) const {
  require_same_ring(ring_, other.ring_);
  if (other.rank_ != rank_) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "submodules of different ranks");
  return std::all_of(other.columns_.begin(), other.columns_.end(),
                     [&](const std::vector<Polynomial>& c) { return contains(c); });
}

bool Submodule::contains_columns(const PolyMatrix& m) const {
  if (m.rows() != rank_) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "matrix height differs from rank");
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!contains(m.column(c))) return false;
  return true;
}

// ------------------------------------------------------------------ operations

RingRef with_order(const RingRef& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->variables(), order);
}

Ideal buchberger(const std::vector<Polynomial>& gens, MonomialOrder order) {
  if (gens.empty()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "no generators given");
  RingRef ring = with_order(gens.front().ring(), order);
  std::vector<std::size_t> identity(ring->nvars());
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Polynomial> moved;
  for (const auto& f : gens) {
    require_same_ring(f.ring(), gens.front().ring());
    moved.push_back(remap(f, ring, identity));
  }
  return Ideal(QuotientRing(ring), std::move(moved));
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) { return ideal.normal_form(f); }

PolyMatrix syzygies(const PolyMatrix& m, const QuotientRing& ring) {
  require_same_ring(m.ring(), ring.ambient());
  const RingRef& k = ring.ambient();
  const std::size_t g = m.cols();
  FreeModule space(k, m.rows());
  std::vector<ModuleVector> gens;
  for (std::size_t c = 0; c < g; ++c) gens.push_back(space.from_column(m.column(c)));
  for (const auto& f : ring.defining_basis())
    for (std::size_t r = 0; r < m.rows(); ++r) gens.push_back(space.from_polynomial(f, static_cast<std::uint32_t>(r)));
  GroebnerBasis gb = GroebnerBasis::compute(space, std::move(gens), {.track_representation = true});
  std::vector<std::vector<Polynomial>> out;
  for (const auto& s : gb.generator_syzygies()) {
    auto full = gb.generator_space().to_column(s);
    std::vector<Polynomial> col;
    bool zero = true;
    for (std::size_t c = 0; c < g; ++c) {
      col.push_back(ring.reduce(full[c]));
      zero = zero && col.back().is_zero();
    }
    if (zero) continue;
    // Normalize so the first nonzero entry's lead coefficient is 1.
    for (const auto& e : col) {
      if (e.is_zero()) continue;
      Scalar inv = e.lead_coefficient().inverse();
      for (auto& x : col) x = x.scaled(inv);
      break;
    }
    if (std::find(out.begin(), out.end(), col) == out.end()) out.push_back(std::move(col));
  }
  return PolyMatrix::from_columns(k, g, out);
}

std::vector<Polynomial> eliminate_generators(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& keep) {
  if (gens.empty()) return {};
  const RingRef& ring = gens.front().ring();
  const std::size_t n = ring->nvars();
  std::vector<bool> kept(n, false);
  for (auto i : keep) {
    if (i >= n) throw AlgebraError(AlgebraError::Kind::OutOfRange, "variable index out of range");
    kept[i] = true;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (!kept[i]) order.push_back(i);
  const std::size_t block = order.size();
  for (std::size_t i = 0; i < n; ++i)
    if (kept[i]) order.push_back(i);

  std::vector<std::string> names;
  std::vector<std::size_t> forward(n), backward(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    names.push_back(ring->variables()[order[pos]]);
    forward[order[pos]] = pos;
    backward[pos] = order[pos];
  }
  RingRef elim = make_ring(ring->field(), names,
                           block == 0 ? MonomialOrder::grevlex() : MonomialOrder::elimination(block));
  std::vector<Polynomial> moved;
  for (const auto& f : gens) moved.push_back(remap(f, elim, forward));
  GroebnerBasis gb = ideal_basis(elim, moved);
  const std::uint32_t mask = block == 0 ? 0 : (std::uint32_t{1} << block) - 1;
  std::vector<Polynomial> out;
  for (const auto& f : reduced_polys(gb)) {
    bool free = std::all_of(f.terms().begin(), f.terms().end(),
                            [&](const Term& t) { return (t.monomial.support() & mask) == 0; });
    if (free) out.push_back(remap(f, ring, backward));
  }
  return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& keep) {
  if (!ideal.ring().is_polynomial_ring())
    throw AlgebraError(AlgebraError::Kind::Unsupported, "elimination is only supported over a polynomial ring");
  return Ideal(ideal.ring(), eliminate_generators(ideal.generators(), keep));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return Ideal(a.ring(), intersect_generators(a.ring().ambient(), a.basis(), b.basis()));
}

Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "empty intersection");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i]);
  return acc;
}

Ideal ideal_colon(const Ideal& j, const Polynomial& f) {
  require_same_ring(f.ring(), j.ring().ambient());
  if (j.contains(f)) return Ideal::unit(j.ring());
  std::vector<Polynomial> out;
  for (const auto& h : intersect_generators(j.ring().ambient(), j.basis(), {f})) out.push_back(divide_exact(h, f));
  return Ideal(j.ring(), std::move(out));
}

Ideal ideal_colon(const Ideal& j, const Ideal& k) {
  require_same_ring(j.ring(), k.ring());
  std::vector<Ideal> parts;
  for (const auto& f : k.generators())
    if (!j.contains(f)) parts.push_back(ideal_colon(j, f));
  if (parts.empty()) return Ideal::unit(j.ring());
  return ideal_intersect(parts);
}

bool radical_member(const Polynomial& f, const Ideal& ideal) {
  const RingRef& ring = ideal.ring().ambient();
  require_same_ring(f.ring(), ring);
  if (ideal.contains(f)) return true;
  std::vector<std::string> names = ring->variables();
  names.push_back(fresh_name(ring, "_t"));
  RingRef big = make_ring(ring->field(), names, MonomialOrder::grevlex());
  std::vector<std::size_t> map(ring->nvars());
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.basis()) gens.push_back(remap(g, big, map));
  Polynomial t = Polynomial::variable(big, ring->nvars());
  gens.push_back(Polynomial::constant(big, 1) - t * remap(f, big, map));
  return ideal_basis(big, gens).is_whole_module();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Polynomial h = a.ring().reduce(f * g);
      if (!h.is_zero() && std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int s) {
  if (s < 0) throw AlgebraError(AlgebraError::Kind::OutOfRange, "negative ideal power");
  Ideal acc = Ideal::unit(a.ring());
  for (int i = 0; i < s; ++i) acc = ideal_product(acc, a);
  return acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.basis() == b.basis();
}

std::optional<int> krull_dimension(const QuotientRing& ring) {
  const GroebnerBasis& gb = ring.defining_groebner();
  if (gb.is_whole_module()) return std::nullopt;
  std::vector<std::uint32_t> supports;
  for (const auto& v : gb.reduced()) supports.push_back(v.lead().monomial.support());
  return max_independent_set(ring.nvars(), supports);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "division by zero");
  std::vector<Term> quotient;
  Polynomial r = f;
  while (!r.is_zero()) {
    if (!g.lead_monomial().divides(r.lead_monomial()))
      throw AlgebraError(AlgebraError::Kind::Internal, g.to_string() + " does not divide " + f.to_string());
    Monomial m = r.lead_monomial() / g.lead_monomial();
    Scalar c = r.lead_coefficient() / g.lead_coefficient();
    quotient.push_back({m, c});
    r = sub_mul(r, c, m, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

}  // namespace jacal
