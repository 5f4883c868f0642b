#include "jacal/koszul.hpp"

#include "jacal/error.hpp"

namespace jacal {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t c, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == i) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < c; ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::size_t KoszulComplex::rank(std::size_t i) const {
  if (i > sequence.size()) return 0;
  return subsets(sequence.size(), i).size();
}

KoszulComplex koszul_complex(const QuotientRing& ring, const std::vector<Polynomial>& sequence) {
  for (const auto& f : sequence) require_same_ring(f.ring(), ring.ambient());
  const std::size_t c = sequence.size();
  KoszulComplex k{ring, sequence, {}, std::nullopt};
  for (std::size_t i = 1; i <= c; ++i) {
    auto source = subsets(c, i);
    auto target = subsets(c, i - 1);
    PolyMatrix d(ring.ambient(), target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto& s = source[col];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        auto rest = s;
        rest.erase(rest.begin() + static_cast<long>(pos));
        auto row = static_cast<std::size_t>(std::find(target.begin(), target.end(), rest) - target.begin());
        Polynomial entry = ring.reduce(sequence[s[pos]]);
        d(row, col) = pos % 2 == 0 ? entry : -entry;
      }
    }
    k.maps.push_back(std::move(d));
  }
  bool graded = ring.is_homogeneous();
  for (const auto& f : sequence) graded = graded && f.is_homogeneous() && !f.is_zero();
  if (graded) {
    std::vector<std::vector<int>> twists;
    for (std::size_t i = 0; i <= c; ++i) {
      std::vector<int> t;
      for (const auto& s : subsets(c, i)) {
        int deg = 0;
        for (auto idx : s) deg += sequence[idx].total_degree();
        t.push_back(deg);
      }
      twists.push_back(std::move(t));
    }
    k.twists = std::move(twists);
  }
  return k;
}

Subquotient koszul_homology(const std::vector<Polynomial>& sequence, const QuotientRing& ring, std::size_t i) {
  if (i > sequence.size()) throw AlgebraError(AlgebraError::Kind::OutOfRange, "Koszul homology index out of range");
  KoszulComplex k = koszul_complex(ring, sequence);
  const RingRef& base = ring.ambient();
  const std::size_t r = k.rank(i);
  PolyMatrix cycles = i == 0 ? PolyMatrix::identity(base, r) : syzygies(k.maps[i - 1], ring);
  PolyMatrix boundary = i < sequence.size() ? k.maps[i] : PolyMatrix(base, r, 0);
  std::optional<std::vector<int>> twists;
  if (k.twists) twists = (*k.twists)[i];
  return Subquotient(ring, cycles, boundary, twists);
}

QuotientRing doubled_quotient(const QuotientRing& ring, const DoubledRing& doubled) {
  std::vector<Polynomial> gens;
  for (const auto& f : ring.defining_basis()) gens.push_back(doubled.left(f));
  for (const auto& f : ring.defining_basis()) gens.push_back(doubled.right(f));
  return QuotientRing(doubled.ring, gens);
}

Subquotient tor_over_normalization(const NormalizationData& a, std::size_t i, bool swap_factors) {
  a.require_certified();
  DoubledRing doubled = double_variables(a.ring.ambient());
  QuotientRing t = doubled_quotient(a.ring, doubled);
  std::vector<Polynomial> seq;
  for (const auto& th : a.theta)
    seq.push_back(swap_factors ? doubled.right(th) - doubled.left(th) : doubled.left(th) - doubled.right(th));
  return koszul_homology(seq, t, i);
}

}  // namespace jacal
