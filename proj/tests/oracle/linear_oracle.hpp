#pragma once

// Test-only reference computations by plain linear algebra over the base
// field: degree-truncated spans of multiples of generators. Independent of
// the Gröbner engine.

#include <map>
#include <vector>

#include "jacal/polynomial.hpp"

namespace jacal::oracle {

using Key = std::pair<std::uint32_t, std::vector<int>>;

// Larger keys first so the pivot of a row is its first entry.
struct KeyGreater {
  bool operator()(const Key& a, const Key& b) const { return a > b; }
};
using Row = std::map<Key, Scalar, KeyGreater>;

inline std::vector<int> exponents(const Monomial& m) {
  std::vector<int> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = m[i];
  return e;
}

inline Row to_row(const std::vector<Polynomial>& column) {
  Row row;
  for (std::uint32_t c = 0; c < column.size(); ++c)
    for (const auto& t : column[c].terms()) row[{c, exponents(t.monomial)}] = t.coefficient;
  return row;
}

class Echelon {
 public:
  // Reduces r against stored rows; returns the remainder.
  Row reduce(Row r) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = r.find(pivot);
      if (it == r.end()) continue;
      Scalar c = it->second;
      for (const auto& [k, v] : row) {
        Scalar nv = r.count(k) ? r[k] - c * v : -(c * v);
        if (nv.is_zero()) r.erase(k);
        else r[k] = nv;
      }
    }
    return r;
  }

  bool add(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Scalar inv = r.begin()->second.inverse();
    for (auto& [k, v] : r) v = v * inv;
    Key pivot = r.begin()->first;
    // Keep stored rows fully reduced with respect to the new pivot.
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Scalar c = it->second;
      for (const auto& [k, v] : r) {
        Scalar nv = row.count(k) ? row[k] - c * v : -(c * v);
        if (nv.is_zero()) row.erase(k);
        else row[k] = nv;
      }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, Row, KeyGreater>& rows() const { return rows_; }

 private:
  std::map<Key, Row, KeyGreater> rows_;
};

inline void monomials_rec(std::size_t n, std::size_t i, int left, Monomial& m, std::vector<Monomial>& out) {
  if (i + 1 == n) {
    m.set(i, left);
    out.push_back(m);
    m.set(i, 0);
    return;
  }
  for (int e = left; e >= 0; --e) {
    m.set(i, e);
    monomials_rec(n, i + 1, left - e, m, out);
  }
  m.set(i, 0);
}

inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(n);
  monomials_rec(n, 0, d, m, out);
  return out;
}

inline int column_degree(const std::vector<Polynomial>& column) {
  int d = -1;
  for (const auto& p : column) d = std::max(d, p.total_degree());
  return d;
}

inline std::vector<Polynomial> times(const std::vector<Polynomial>& column, const Monomial& m) {
  std::vector<Polynomial> out;
  for (const auto& p : column) out.push_back(p.times_term(m, p.ring()->field().one()));
  return out;
}

// Whether target lies in the span of {m * g : deg(m * g) <= bound}.
// A positive answer proves membership; a negative one is conclusive when
// everything is homogeneous and bound >= deg(target).
inline bool member_up_to(const std::vector<std::vector<Polynomial>>& gens, const std::vector<Polynomial>& target,
                         int bound) {
  Echelon e;
  const RingRef& ring = target.front().ring();
  for (const auto& g : gens) {
    int dg = column_degree(g);
    if (dg < 0) continue;
    for (int d = 0; d + dg <= bound; ++d)
      for (const auto& m : monomials_of_degree(ring->nvars(), d)) e.add(to_row(times(g, m)));
  }
  return e.reduce(to_row(target)).empty();
}

inline bool poly_member_up_to(const std::vector<Polynomial>& gens, const Polynomial& target, int bound) {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : gens) cols.push_back({g});
  return member_up_to(cols, {target}, bound);
}

// dim_k of degree d of coker(gens) on a free module with generator
// degrees `twists`; gens must be homogeneous columns.
inline std::size_t quotient_piece_dim(const RingRef& ring, const std::vector<int>& twists,
                                      const std::vector<std::vector<Polynomial>>& gens, int d) {
  std::size_t total = 0;
  for (int a : twists) total += monomials_of_degree(ring->nvars(), d - a).size();
  Echelon e;
  for (const auto& g : gens) {
    int gd = -1;
    for (std::size_t r = 0; r < g.size(); ++r)
      if (!g[r].is_zero()) {
        gd = g[r].total_degree() + twists[r];
        break;
      }
    if (gd < 0 || gd > d) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), d - gd)) e.add(to_row(times(g, m)));
  }
  return total - e.rank();
}

// Basis of {a : sum a_i * m_i = 0} for the entries m_i of one row, with
// every a_i of total degree <= bound. Returned as columns.
inline std::vector<std::vector<Polynomial>> bounded_syzygies(const std::vector<Polynomial>& row, int bound) {
  const RingRef& ring = row.front().ring();
  constexpr std::uint32_t kImage = 1u << 30;
  Echelon e;
  for (std::uint32_t i = 0; i < row.size(); ++i)
    for (int d = 0; d <= bound; ++d)
      for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
        Row r;
        Polynomial image = row[i].times_term(m, ring->field().one());
        for (const auto& t : image.terms()) r[{kImage, exponents(t.monomial)}] = t.coefficient;
        r[{i, exponents(m)}] = ring->field().one();
        e.add(std::move(r));
      }
  std::vector<std::vector<Polynomial>> out;
  for (const auto& [pivot, r] : e.rows()) {
    if (pivot.first >= kImage) continue;
    std::vector<std::vector<Term>> terms(row.size());
    for (const auto& [k, v] : r) terms[k.first].push_back({Monomial(ring->nvars(), k.second), v});
    std::vector<Polynomial> col;
    for (auto& t : terms) col.push_back(Polynomial::from_terms(ring, std::move(t)));
    out.push_back(std::move(col));
  }
  return out;
}

inline std::size_t ideal_quotient_piece_dim(const RingRef& ring, const std::vector<Polynomial>& gens, int d) {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : gens) cols.push_back({g});
  return quotient_piece_dim(ring, {0}, cols, d);
}

}  // namespace jacal::oracle
