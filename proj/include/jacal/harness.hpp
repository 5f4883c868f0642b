#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacal/module.hpp"

namespace jacal {

struct ProbePair {
  std::string label;
  FPModule m;
  FPModule target;
};

/// Finite sample of module pairs (M, N) over one ring. Always contains
/// (k, k) and (R, k) for k = R/(x_1..x_n), ahead of the named pairs.
class ProbeCorpus {
 public:
  explicit ProbeCorpus(QuotientRing ring, std::vector<ProbePair> named = {});

  const QuotientRing& ring() const { return ring_; }
  const std::vector<ProbePair>& pairs() const { return pairs_; }

 private:
  QuotientRing ring_;
  std::vector<ProbePair> pairs_;
};

/// R/(x_1, ..., x_n).
FPModule residue_module(const QuotientRing& ring);

struct ExponentResult {
  std::optional<int> s;  // nullopt when s_max was exceeded
  int s_max = 10;
  /// Ext degree searched, d + 1.
  std::size_t ext_degree = 0;
  std::string to_string() const;
};

/// Smallest s <= s_max such that every generator of J^s acts as zero on
/// Ext^{d+1}(M, N) for every corpus pair, d = dim R. A sampled necessary
/// condition, never a proof for all modules.
ExponentResult annihilation_exponent(const QuotientRing& ring, const Ideal& j, const ProbeCorpus& corpus,
                                     int s_max = 10);

struct DecompositionClaim {
  Ideal target;
  std::vector<Ideal> components;
  /// Recorded only; primality is not checked.
  bool primality_asserted = false;
};

/// The intersection of the components equals the target.
bool decomposition_check(const DecompositionClaim& claim);

struct HypothesisReport {
  bool decomposition = false;
  std::vector<int> prime_dimensions;
  bool equidimensional = false;
  std::optional<int> dimension;
  /// Global depth via Auslander-Buchsbaum; nullopt when R is not graded.
  std::optional<int> depth;
  /// 2 depth R >= dim R, checked globally only.
  std::optional<bool> depth_condition;
  std::vector<std::string> notes;

  bool cohen_macaulay() const { return depth && dimension && *depth == *dimension; }
  /// Decomposition holds, equidimensional, and depth = dim.
  bool passes() const { return decomposition && equidimensional && cohen_macaulay(); }
  std::string to_string() const;
};

HypothesisReport theorem2_hypotheses(const QuotientRing& ring, const DecompositionClaim& claim,
                                     const std::vector<Ideal>& primes);

struct CorpusLine {
  bool pass;
  std::string fixture;
  std::string assertion;
  std::string expected;
  std::string got;
  /// `PASS|FAIL <fixture>.<assertion> expected=<...> got=<...>`
  std::string to_string() const;
};

struct CorpusReport {
  std::vector<CorpusLine> lines;
  /// Non-assertion output such as recorded verdicts and diagnostics.
  std::vector<std::string> notes;
  bool all_passed() const;
  std::string to_string() const;
};

struct CorpusScript {
  std::string name;
  std::string source;
};

/// The scripts shipped with the library, in a fixed order.
const std::vector<CorpusScript>& example_corpus();

/// Runs every shipped script and collects its assertion lines.
CorpusReport run_example_corpus(int s_max = 10);

}  // namespace jacal
