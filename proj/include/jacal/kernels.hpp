#pragma once

#include <span>
#include <vector>

#include "jacal/groebner.hpp"
#include "jacal/matrix.hpp"

// Data-parallel inner loops of the engine. Each kernel has an OpenMP
// version (used by the library) and a serial reference in
// `kernels::serial` with identical output, kept for tests and benchmarks.
namespace jacal::kernels {

/// All t x t minors of m in lexicographic (row set, column set) order.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t t);

/// Lifted S-vectors for every Schreyer pair of `basis`, in pair order.
std::vector<ModuleVector> schreyer_lifts(const GroebnerBasis& basis);

/// Normal form of each vector against `basis`.
std::vector<ModuleVector> normal_forms(const GroebnerBasis& basis, std::span<const ModuleVector> vectors);

/// Number of threads the parallel kernels will use.
int thread_count();

namespace serial {
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t t);
std::vector<ModuleVector> schreyer_lifts(const GroebnerBasis& basis);
std::vector<ModuleVector> normal_forms(const GroebnerBasis& basis, std::span<const ModuleVector> vectors);
}  // namespace serial

}  // namespace jacal::kernels
