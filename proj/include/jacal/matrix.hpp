#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacal/polynomial.hpp"

namespace jacal {

/// Dense rows x cols matrix of polynomials over one ring. Columns are
/// the module elements (a presentation matrix's columns are relations).
class PolyMatrix {
 public:
  PolyMatrix(RingRef ring, std::size_t rows, std::size_t cols);
  /// Builds from row lists; all rows must have equal length.
  static PolyMatrix from_rows(const RingRef& ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix from_columns(const RingRef& ring, std::size_t rows,
                                 const std::vector<std::vector<Polynomial>>& columns);
  static PolyMatrix identity(const RingRef& ring, std::size_t n);

  const RingRef& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> row(std::size_t r) const;

  const std::optional<std::vector<int>>& twists() const { return twists_; }
  void set_twists(std::vector<int> twists);

  PolyMatrix transpose() const;
  PolyMatrix select_columns(const std::vector<std::size_t>& cols) const;
  /// Columns of `this` followed by columns of `other`.
  PolyMatrix concat_columns(const PolyMatrix& other) const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// One row per line: `[a, b, c]`.
  std::string to_string() const;

 private:
  RingRef ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
  std::optional<std::vector<int>> twists_;
};

/// Determinants of all t x t submatrices, by memoized cofactor expansion;
/// output ordered lexicographically by (row set, column set).
std::vector<Polynomial> matrix_minors(const PolyMatrix& m, std::size_t t);

/// Determinant of a square matrix (cofactor expansion, memoized).
Polynomial determinant(const PolyMatrix& m);

}  // namespace jacal
