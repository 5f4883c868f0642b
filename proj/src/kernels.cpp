#include "jacal/kernels.hpp"

#include <exception>
#include <map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jacal::kernels {

namespace {

using Mask = std::uint64_t;

class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix& m) : m_(m) {}

  const Polynomial& det(Mask rows, Mask cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial value(m_.ring());
    if (rows == 0) {
      value = Polynomial::constant(m_.ring(), 1);
    } else {
      int r = __builtin_ctzll(rows);
      Mask rest = rows & (rows - 1);
      int sign_index = 0;
      for (Mask c = cols; c != 0; c &= c - 1, ++sign_index) {
        int col = __builtin_ctzll(c);
        const Polynomial& entry = m_(static_cast<std::size_t>(r), static_cast<std::size_t>(col));
        if (entry.is_zero()) continue;
        Polynomial term = entry * det(rest, cols & ~(Mask{1} << col));
        value = (sign_index % 2 == 0) ? value + term : value - term;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::map<std::pair<Mask, Mask>, Polynomial> memo_;
};

std::vector<Mask> subsets(std::size_t n, std::size_t t) {
  // Lexicographic order on sorted index lists.
  std::vector<Mask> out;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    out.push_back(m);
    std::size_t k = t;
    while (k > 0 && idx[k - 1] == n - t + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < t; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<std::pair<Mask, Mask>> minor_index(const PolyMatrix& m, std::size_t t) {
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask r : subsets(m.rows(), t))
    for (Mask c : subsets(m.cols(), t)) out.emplace_back(r, c);
  return out;
}

// Runs body(i) for i in [0, n) in parallel and rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t t) {
  auto index = minor_index(m, t);
  std::vector<Polynomial> out(index.size(), Polynomial(m.ring()));
  std::exception_ptr failure;
#pragma omp parallel
  {
    MinorTable table(m);
#pragma omp for schedule(static)
    for (long k = 0; k < static_cast<long>(index.size()); ++k) {
      try {
        out[static_cast<std::size_t>(k)] = table.det(index[static_cast<std::size_t>(k)].first,
                                                     index[static_cast<std::size_t>(k)].second);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ModuleVector> schreyer_lifts(const GroebnerBasis& basis) {
  auto pairs = basis.schreyer_pairs();
  std::vector<ModuleVector> out(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) { out[k] = basis.lift_pair(pairs[k]); });
  return out;
}

std::vector<ModuleVector> normal_forms(const GroebnerBasis& basis, std::span<const ModuleVector> vectors) {
  std::vector<ModuleVector> out(vectors.size());
  parallel_for(vectors.size(), [&](std::size_t k) { out[k] = basis.normal_form(vectors[k]); });
  return out;
}

namespace serial {

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t t) {
  MinorTable table(m);
  std::vector<Polynomial> out;
  for (auto [r, c] : minor_index(m, t)) out.push_back(table.det(r, c));
  return out;
}

std::vector<ModuleVector> schreyer_lifts(const GroebnerBasis& basis) {
  std::vector<ModuleVector> out;
  for (auto p : basis.schreyer_pairs()) out.push_back(basis.lift_pair(p));
  return out;
}

std::vector<ModuleVector> normal_forms(const GroebnerBasis& basis, std::span<const ModuleVector> vectors) {
  std::vector<ModuleVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(basis.normal_form(v));
  return out;
}

}  // namespace serial

}  // namespace jacal::kernels
