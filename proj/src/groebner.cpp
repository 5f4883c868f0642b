#include "jacal/groebner.hpp"

#include <algorithm>

#include "jacal/error.hpp"
#include "jacal/kernels.hpp"

namespace jacal {

namespace {

/// Everything a reduction needs to see of a basis.
struct BasisView {
  const std::vector<ModuleVector>& values;
  const std::vector<std::size_t>* subset;  // null: all of `values`
  const std::vector<ModuleVector>* reps;   // null: no representation tracking
};

long find_divisor(const BasisView& basis, const VectorTerm& t) {
  auto check = [&](std::size_t k) {
    const VectorTerm& lead = basis.values[k].lead();
    return lead.component == t.component && lead.monomial.divides(t.monomial);
  };
  if (basis.subset) {
    for (std::size_t k : *basis.subset)
      if (check(k)) return static_cast<long>(k);
  } else {
    for (std::size_t k = 0; k < basis.values.size(); ++k)
      if (check(k)) return static_cast<long>(k);
  }
  return -1;
}

/// Full reduction of f. Optionally updates `rep` (so that f - remainder is
/// tracked through the representations) and collects quotient terms.
ModuleVector reduce_against(const FreeModule& space, ModuleVector f, const BasisView& basis,
                            const FreeModule* rep_space, ModuleVector* rep,
                            std::vector<std::vector<Term>>* quotients) {
  ModuleVector result;
  std::size_t pos = 0;
  while (pos < f.terms.size()) {
    long k = find_divisor(basis, f.terms[pos]);
    if (k < 0) {
      result.terms.push_back(f.terms[pos]);
      ++pos;
      continue;
    }
    const ModuleVector& g = basis.values[static_cast<std::size_t>(k)];
    Scalar c = f.terms[pos].coefficient / g.lead().coefficient;
    Monomial m = f.terms[pos].monomial / g.lead().monomial;
    if (rep) *rep = rep_space->sub_mul(*rep, c, m, (*basis.reps)[static_cast<std::size_t>(k)]);
    if (quotients) (*quotients)[static_cast<std::size_t>(k)].push_back({m, c});
    if (pos != 0) f.terms.erase(f.terms.begin(), f.terms.begin() + static_cast<long>(pos));
    f = space.sub_mul(f, c, m, g);
    pos = 0;
  }
  return result;
}

ModuleVector s_vector(const FreeModule& space, const ModuleVector& a, const ModuleVector& b,
                      const Monomial& l) {
  // a, b monic with equal lead component.
  Monomial ma = l / a.lead().monomial;
  Monomial mb = l / b.lead().monomial;
  ModuleVector left = space.sub_mul(ModuleVector{}, -a.lead().coefficient.inverse(), ma, a);
  return space.sub_mul(left, b.lead().coefficient.inverse(), mb, b);
}

}  // namespace

struct GroebnerBasis::Data {
  FreeModule space;
  FreeModule generator_space;
  bool tracked = false;
  std::vector<ModuleVector> generators;
  std::vector<ModuleVector> minimal;       // minimal basis, insertion order
  std::vector<ModuleVector> minimal_reps;  // minimal[k] = sum rep * generators
  std::vector<ModuleVector> reduced;
};

struct GroebnerBuilder::State {
  struct PairRecord {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t component;
  };

  FreeModule space;
  std::optional<FreeModule> rep_space;
  std::vector<ModuleVector> values;
  std::vector<ModuleVector> reps;
  std::vector<std::size_t> active;
  std::vector<PairRecord> pairs;

  BasisView view() const { return {values, &active, rep_space ? &reps : nullptr}; }

  ModuleVector reduce(ModuleVector f, ModuleVector* rep) const {
    return reduce_against(space, std::move(f), view(), rep_space ? &*rep_space : nullptr, rep, nullptr);
  }

  void insert(ModuleVector h, ModuleVector rep) {
    Scalar inv = h.lead().coefficient.inverse();
    values.push_back(space.scale(h, inv));
    reps.push_back(rep_space ? rep_space->scale(rep, inv) : ModuleVector{});
    update(values.size() - 1);
  }

  // Gebauer–Möller update for the new element t.
  void update(std::size_t t) {
    const bool ideal_case = space.rank() == 1;
    const Monomial& hl = values[t].lead().monomial;
    const std::uint32_t hc = values[t].lead().component;

    std::vector<PairRecord> candidates;
    for (std::size_t g : active) {
      const VectorTerm& gl = values[g].lead();
      if (gl.component == hc) candidates.push_back({g, t, lcm(gl.monomial, hl), hc});
    }
    std::vector<PairRecord> kept;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const PairRecord& p = candidates[idx];
      bool keep = ideal_case && values[p.i].lead().monomial.coprime(hl);
      if (!keep) {
        keep = true;
        for (std::size_t q = idx + 1; q < candidates.size() && keep; ++q)
          if (candidates[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : kept)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<PairRecord> fresh;
    for (auto& p : kept)
      if (!(ideal_case && values[p.i].lead().monomial.coprime(hl))) fresh.push_back(std::move(p));

    std::vector<PairRecord> survivors;
    for (auto& p : pairs) {
      bool drop = p.component == hc && hl.divides(p.lcm) &&
                  !(lcm(values[p.i].lead().monomial, hl) == p.lcm) &&
                  !(lcm(values[p.j].lead().monomial, hl) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs = std::move(survivors);

    std::vector<std::size_t> next;
    for (std::size_t g : active) {
      const VectorTerm& gl = values[g].lead();
      if (!(gl.component == hc && hl.divides(gl.monomial))) next.push_back(g);
    }
    next.push_back(t);
    active = std::move(next);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = space.compare(a.lcm, a.component, b.lcm, b.component);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  void complete() {
    while (!pairs.empty()) {
      std::size_t k = select_pair();
      PairRecord p = pairs[k];
      pairs.erase(pairs.begin() + static_cast<long>(k));
      ModuleVector s = s_vector(space, values[p.i], values[p.j], p.lcm);
      ModuleVector rep;
      if (rep_space) {
        Monomial mi = p.lcm / values[p.i].lead().monomial;
        Monomial mj = p.lcm / values[p.j].lead().monomial;
        rep = rep_space->sub_mul(ModuleVector{}, -rep_space->ring()->field().one(), mi, reps[p.i]);
        rep = rep_space->sub_mul(rep, rep_space->ring()->field().one(), mj, reps[p.j]);
      }
      ModuleVector r = reduce(std::move(s), rep_space ? &rep : nullptr);
      if (!r.is_zero()) insert(std::move(r), std::move(rep));
    }
  }
};

GroebnerBuilder::GroebnerBuilder(const FreeModule& space, std::optional<std::size_t> tracked_generators)
    : state_(std::make_unique<State>(State{space, std::nullopt, {}, {}, {}, {}})) {
  if (tracked_generators)
    state_->rep_space.emplace(space.ring(), *tracked_generators, ModuleOrderKind::PositionOverTerm);
}

GroebnerBuilder::~GroebnerBuilder() = default;
GroebnerBuilder::GroebnerBuilder(GroebnerBuilder&&) noexcept = default;
GroebnerBuilder& GroebnerBuilder::operator=(GroebnerBuilder&&) noexcept = default;

void GroebnerBuilder::add(const ModuleVector& v, std::size_t index) {
  ModuleVector rep;
  if (state_->rep_space) rep = state_->rep_space->unit(static_cast<std::uint32_t>(index));
  ModuleVector r = state_->reduce(v, state_->rep_space ? &rep : nullptr);
  if (!r.is_zero()) state_->insert(std::move(r), std::move(rep));
}

void GroebnerBuilder::complete() { state_->complete(); }

ModuleVector GroebnerBuilder::normal_form(const ModuleVector& f) const { return state_->reduce(f, nullptr); }

GroebnerBasis GroebnerBuilder::finish(std::vector<ModuleVector> generators) const {
  const State& s = *state_;
  auto data = std::make_shared<GroebnerBasis::Data>(GroebnerBasis::Data{
      s.space,
      s.rep_space ? *s.rep_space : FreeModule(s.space.ring(), generators.size(), ModuleOrderKind::PositionOverTerm),
      s.rep_space.has_value(),
      std::move(generators),
      {},
      {},
      {}});
  for (std::size_t k : s.active) {
    data->minimal.push_back(s.values[k]);
    data->minimal_reps.push_back(s.reps[k]);
  }
  BasisView view{data->minimal, nullptr, nullptr};
  for (const auto& g : data->minimal) {
    ModuleVector tail;
    tail.terms.assign(g.terms.begin() + 1, g.terms.end());
    ModuleVector r = reduce_against(s.space, std::move(tail), view, nullptr, nullptr, nullptr);
    r.terms.insert(r.terms.begin(), g.terms.front());
    data->reduced.push_back(s.space.monic(r));
  }
  std::sort(data->reduced.begin(), data->reduced.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return s.space.compare(a.lead(), b.lead()) > 0;
  });
  return GroebnerBasis(std::move(data));
}

GroebnerBasis GroebnerBasis::compute(const FreeModule& space, std::vector<ModuleVector> generators,
                                     Options options) {
  GroebnerBuilder builder(space, options.track_representation
                                     ? std::optional<std::size_t>(generators.size())
                                     : std::nullopt);
  for (std::size_t i = 0; i < generators.size(); ++i) builder.add(generators[i], i);
  builder.complete();
  return builder.finish(std::move(generators));
}

const FreeModule& GroebnerBasis::space() const { return data_->space; }
const std::vector<ModuleVector>& GroebnerBasis::reduced() const { return data_->reduced; }
const std::vector<ModuleVector>& GroebnerBasis::generators() const { return data_->generators; }
const FreeModule& GroebnerBasis::generator_space() const { return data_->generator_space; }

ModuleVector GroebnerBasis::normal_form(const ModuleVector& f) const {
  return reduce_against(data_->space, f, BasisView{data_->reduced, nullptr, nullptr}, nullptr, nullptr, nullptr);
}

bool GroebnerBasis::is_whole_module() const {
  std::vector<bool> seen(data_->space.rank(), false);
  for (const auto& g : data_->reduced)
    if (g.lead().monomial.is_one()) seen[g.lead().component] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GroebnerBasis::Division GroebnerBasis::divide(const ModuleVector& f) const {
  std::vector<std::vector<Term>> quotient_terms(data_->reduced.size());
  Division d;
  d.remainder = reduce_against(data_->space, f, BasisView{data_->reduced, nullptr, nullptr}, nullptr, nullptr,
                               &quotient_terms);
  for (auto& terms : quotient_terms) d.quotients.push_back(Polynomial::from_terms(data_->space.ring(), std::move(terms)));
  return d;
}

std::vector<GroebnerBasis::Pair> GroebnerBasis::schreyer_pairs() const {
  const auto& g = data_->minimal;
  std::vector<Pair> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const VectorTerm& lj = g[j].lead();
    std::vector<std::size_t> candidates;
    std::vector<Monomial> quotients;
    for (std::size_t i = 0; i < j; ++i) {
      if (g[i].lead().component != lj.component) continue;
      candidates.push_back(i);
      quotients.push_back(lcm(g[i].lead().monomial, lj.monomial) / lj.monomial);
    }
    // Keep the minimal generators of the monomial ideal of quotients.
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < candidates.size() && minimal; ++b) {
        if (a == b || !quotients[b].divides(quotients[a])) continue;
        if (!(quotients[b] == quotients[a]) || b < a) minimal = false;
      }
      if (minimal) out.push_back({candidates[a], j});
    }
  }
  return out;
}

ModuleVector GroebnerBasis::lift_pair(Pair pair) const {
  if (!data_->tracked)
    throw AlgebraError(AlgebraError::Kind::Internal, "syzygy lifting needs a tracked Gröbner basis");
  const auto& g = data_->minimal;
  const auto& reps = data_->minimal_reps;
  const FreeModule& rs = data_->generator_space;
  Monomial l = lcm(g[pair.i].lead().monomial, g[pair.j].lead().monomial);
  ModuleVector s = s_vector(data_->space, g[pair.i], g[pair.j], l);
  Monomial mi = l / g[pair.i].lead().monomial;
  Monomial mj = l / g[pair.j].lead().monomial;
  const Scalar one = rs.ring()->field().one();
  ModuleVector rep = rs.sub_mul(ModuleVector{}, -one, mi, reps[pair.i]);
  rep = rs.sub_mul(rep, one, mj, reps[pair.j]);
  ModuleVector r = reduce_against(data_->space, std::move(s), BasisView{g, nullptr, &reps}, &rs, &rep, nullptr);
  if (!r.is_zero()) throw AlgebraError(AlgebraError::Kind::Internal, "S-vector of a Gröbner basis did not reduce to zero");
  return rep;
}

std::vector<ModuleVector> GroebnerBasis::representation_defects() const {
  if (!data_->tracked)
    throw AlgebraError(AlgebraError::Kind::Internal, "syzygy lifting needs a tracked Gröbner basis");
  const FreeModule& rs = data_->generator_space;
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < data_->generators.size(); ++i) {
    ModuleVector rep = rs.unit(static_cast<std::uint32_t>(i));
    ModuleVector r = reduce_against(data_->space, data_->generators[i],
                                    BasisView{data_->minimal, nullptr, &data_->minimal_reps}, &rs, &rep, nullptr);
    if (!r.is_zero()) throw AlgebraError(AlgebraError::Kind::Internal, "generator not in its own module");
    if (!rep.is_zero()) out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ModuleVector> GroebnerBasis::generator_syzygies() const {
  std::vector<ModuleVector> all = kernels::schreyer_lifts(*this);
  for (auto& d : representation_defects()) all.push_back(std::move(d));
  std::vector<ModuleVector> out;
  for (auto& v : all) {
    if (v.is_zero()) continue;
    v = data_->generator_space.monic(v);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  const auto& g = data_->reduced;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].lead().component != g[j].lead().component) continue;
      Monomial l = lcm(g[i].lead().monomial, g[j].lead().monomial);
      if (!normal_form(s_vector(data_->space, g[i], g[j], l)).is_zero()) return false;
    }
  return true;
}

}  // namespace jacal
