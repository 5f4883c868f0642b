#include "jacal/matrix.hpp"

#include "jacal/error.hpp"
#include "jacal/kernels.hpp"

namespace jacal {

PolyMatrix::PolyMatrix(RingRef ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_rows(const RingRef& ring, const std::vector<std::vector<Polynomial>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  PolyMatrix m(ring, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols)
      throw AlgebraError(AlgebraError::Kind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) {
      require_same_ring(ring, rows[r][c].ring());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::from_columns(const RingRef& ring, std::size_t rows,
                                    const std::vector<std::vector<Polynomial>>& columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw AlgebraError(AlgebraError::Kind::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

PolyMatrix PolyMatrix::identity(const RingRef& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<long>(r * cols_),
          entries_.begin() + static_cast<long>((r + 1) * cols_)};
}

void PolyMatrix::set_twists(std::vector<int> twists) {
  if (twists.size() != cols_)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "twist list length must equal column count");
  twists_ = std::move(twists);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  PolyMatrix m(ring_, rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, cols[k]);
  if (twists_) {
    std::vector<int> tw;
    for (auto c : cols) tw.push_back((*twists_)[c]);
    m.twists_ = std::move(tw);
  }
  return m;
}

PolyMatrix PolyMatrix::concat_columns(const PolyMatrix& other) const {
  require_same_ring(ring_, other.ring_);
  if (rows_ != other.rows_)
    throw AlgebraError(AlgebraError::Kind::InvalidArgument, "row count mismatch in concatenation");
  PolyMatrix m(ring_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "matrix shape mismatch");
  PolyMatrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
    s += "]";
    if (r + 1 < rows_) s += "\n";
  }
  return s;
}

std::vector<Polynomial> matrix_minors(const PolyMatrix& m, std::size_t t) {
  if (t < 1 || t > std::min(m.rows(), m.cols()))
    throw AlgebraError(AlgebraError::Kind::OutOfRange,
                       "minor size " + std::to_string(t) + " out of range for " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  return kernels::minors(m, t);
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError(AlgebraError::Kind::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.ring(), 1);
  return kernels::serial::minors(m, m.rows()).front();
}

}  // namespace jacal
