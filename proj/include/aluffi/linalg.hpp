#pragma once

// Exact dense linear algebra over Q. Pivots are always the first nonzero
// entry in scan order, so results are deterministic.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aluffi/coefficient.hpp"

namespace aluffi {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Coefficient>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Coefficient& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coefficient& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Coefficient> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  QMatrix transpose() const;
  /// Submatrix on the given row and column index lists.
  QMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coefficient> data_;
};

std::vector<Coefficient> operator*(const QMatrix& a, std::span<const Coefficient> v);

/// Fraction-free (Bareiss) determinant. Requires a square matrix.
Coefficient determinant(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Unique solution of A x = b, or nullopt when A is singular.
std::optional<std::vector<Coefficient>> solve(const QMatrix& a, std::span<const Coefficient> b);

/// Throws PreconditionError when singular.
QMatrix inverse(const QMatrix& a);

/// Basis of {v : A v = 0} read off the reduced row echelon form; one vector
/// per free column, with a 1 in that column.
std::vector<std::vector<Coefficient>> kernel_basis(const QMatrix& a);

/// Incrementally grown row space in echelon form. Rows are sparse
/// (column, value) lists normalized so the pivot entry is 1.
class EchelonBasis {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Coefficient>>;

  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension), pivot_row_(dimension, npos) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` (dense, length dimension()) against the basis in place and
  /// returns true when the remainder is nonzero, in which case it is added.
  bool insert(std::vector<Coefficient>& v);
  bool insert(const SparseRow& v);

  /// True when v lies in the span. v is taken by value and reduced.
  bool contains(std::vector<Coefficient> v) const;

  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void reduce(std::vector<Coefficient>& v) const;

  std::size_t dimension_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseRow> rows_;
};

}  // namespace aluffi
