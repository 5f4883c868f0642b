#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "jacal/module_vector.hpp"

namespace jacal {

struct GroebnerOptions {
  /// Record each basis element as a combination of the generators; needed
  /// for generator_syzygies().
  bool track_representation = false;
};

/// Completed Gröbner basis of a submodule of a free module k[x]^r.
///
/// Built by Buchberger's algorithm with the normal selection strategy
/// (smallest lcm degree first) and the Gebauer–Möller pair update, which
/// applies both of Buchberger's criteria (the coprime-lead criterion only
/// for ideals). Cheap to copy; immutable once built.
class GroebnerBasis {
 public:
  using Options = GroebnerOptions;

  static GroebnerBasis compute(const FreeModule& space, std::vector<ModuleVector> generators,
                               Options options = {});

  const FreeModule& space() const;
  /// The unique reduced basis: monic, inter-reduced, sorted by leading
  /// term descending.
  const std::vector<ModuleVector>& reduced() const;
  const std::vector<ModuleVector>& generators() const;

  ModuleVector normal_form(const ModuleVector& f) const;
  bool contains(const ModuleVector& f) const { return normal_form(f).is_zero(); }
  /// True iff the basis generates the whole free module.
  bool is_whole_module() const;

  struct Division {
    /// One quotient per element of reduced().
    std::vector<Polynomial> quotients;
    ModuleVector remainder;
  };
  Division divide(const ModuleVector& f) const;

  /// Schreyer data: pairs of minimal basis elements whose lifted S-vectors
  /// generate the syzygies of the generators.
  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> schreyer_pairs() const;
  /// Lift of one S-vector to a syzygy of the generators (element of
  /// generator_space()). Requires track_representation.
  ModuleVector lift_pair(Pair pair) const;
  /// Columns of (I - T U): generator i minus its re-expression through the
  /// basis. Together with the lifted pairs these generate all syzygies.
  std::vector<ModuleVector> representation_defects() const;
  /// Full generating set of the syzygy module of generators(), in
  /// generator_space(); zero vectors and duplicates removed.
  std::vector<ModuleVector> generator_syzygies() const;
  const FreeModule& generator_space() const;

  /// Every S-vector of reduced() has normal form zero.
  bool satisfies_buchberger_criterion() const;

 private:
  struct Data;
  explicit GroebnerBasis(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
  friend class GroebnerBuilder;
};

/// Incremental Buchberger state. After complete(), normal_form() reduces
/// against a Gröbner basis of everything added so far.
class GroebnerBuilder {
 public:
  explicit GroebnerBuilder(const FreeModule& space, std::optional<std::size_t> tracked_generators = {});
  ~GroebnerBuilder();
  GroebnerBuilder(GroebnerBuilder&&) noexcept;
  GroebnerBuilder& operator=(GroebnerBuilder&&) noexcept;

  /// Adds a generator; with tracking, `index` names its position.
  void add(const ModuleVector& v, std::size_t index = 0);
  void complete();
  ModuleVector normal_form(const ModuleVector& f) const;
  GroebnerBasis finish(std::vector<ModuleVector> generators) const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace jacal
