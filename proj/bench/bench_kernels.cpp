// Parallel kernels against their serial references on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "checks/groebner_checks.hpp"
#include "jacal/kernels.hpp"
#include "support.hpp"

using namespace jacal;

namespace {

PolyMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(7);
  auto r = make_ring(Field::prime(32003), {"x", "y", "z"});
  PolyMatrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = jacal::testing::random_polynomial(rng, r, 3, 2);
  return m;
}

struct Basis {
  GroebnerBasis gb;
  std::vector<ModuleVector> vectors;
};

Basis random_basis() {
  std::mt19937_64 rng(11);
  auto r = make_ring(Field::prime(32003), {"x", "y", "z", "w"});
  FreeModule space(r, 1);
  std::vector<ModuleVector> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(space.from_polynomial(jacal::testing::random_polynomial(rng, r, 3, 3)));
  auto gb = GroebnerBasis::compute(space, gens, {.track_representation = true});
  std::vector<ModuleVector> vectors;
  for (int i = 0; i < 64; ++i) vectors.push_back(space.from_polynomial(jacal::testing::random_polynomial(rng, r, 6, 5)));
  return {std::move(gb), std::move(vectors)};
}

template <bool Parallel>
void Minors(benchmark::State& state) {
  PolyMatrix m = random_matrix(6, 7);
  auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::minors(m, t) : kernels::serial::minors(m, t));
}

template <bool Parallel>
void SchreyerLifts(benchmark::State& state) {
  static const Basis b = random_basis();
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::schreyer_lifts(b.gb) : kernels::serial::schreyer_lifts(b.gb));
}

template <bool Parallel>
void NormalForms(benchmark::State& state) {
  static const Basis b = random_basis();
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? kernels::normal_forms(b.gb, b.vectors)
                                      : kernels::serial::normal_forms(b.gb, b.vectors));
}

}  // namespace

BENCHMARK(Minors<false>)->Arg(3)->Arg(4)->Name("minors/serial");
BENCHMARK(Minors<true>)->Arg(3)->Arg(4)->Name("minors/parallel");
BENCHMARK(SchreyerLifts<false>)->Name("schreyer_lifts/serial");
BENCHMARK(SchreyerLifts<true>)->Name("schreyer_lifts/parallel");
BENCHMARK(NormalForms<false>)->Name("normal_forms/serial");
BENCHMARK(NormalForms<true>)->Name("normal_forms/parallel");

BENCHMARK_MAIN();
