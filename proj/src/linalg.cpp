#include "aluffi/linalg.hpp"

#include "aluffi/errors.hpp"

namespace aluffi {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Coefficient>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  QMatrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

std::vector<Coefficient> operator*(const QMatrix& a, std::span<const Coefficient> v) {
  if (a.cols() != v.size()) throw PreconditionError("matrix/vector shape mismatch");
  std::vector<Coefficient> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Coefficient determinant(const QMatrix& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss on the integer matrix obtained by clearing each row's denominators.
  Coefficient scale = 1;
  std::vector<mpz_class> a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= Coefficient(l);
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = v;
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  Coefficient det(a[n * n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Coefficient inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Coefficient f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  QMatrix copy = m;
  return rref(copy).size();
}

std::optional<std::vector<Coefficient>> solve(const QMatrix& a, std::span<const Coefficient> b) {
  if (!a.square() || b.size() != a.rows()) throw PreconditionError("solve: shape mismatch");
  const std::size_t n = a.rows();
  QMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<Coefficient> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw PreconditionError("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<std::vector<Coefficient>> kernel_basis(const QMatrix& a) {
  QMatrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Coefficient>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coefficient> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonBasis::reduce(std::vector<Coefficient>& v) const {
  for (std::size_t col = 0; col < dimension_; ++col) {
    if (sgn(v[col]) == 0 || pivot_row_[col] == npos) continue;
    const Coefficient f = v[col];
    for (const auto& [c, x] : rows_[pivot_row_[col]]) v[c] -= f * x;
  }
}

bool EchelonBasis::insert(std::vector<Coefficient>& v) {
  if (v.size() != dimension_) throw PreconditionError("echelon basis: dimension mismatch");
  reduce(v);
  std::size_t lead = 0;
  while (lead < dimension_ && sgn(v[lead]) == 0) ++lead;
  if (lead == dimension_) return false;
  const Coefficient inv = 1 / v[lead];
  SparseRow row;
  for (std::size_t c = lead; c < dimension_; ++c)
    if (sgn(v[c]) != 0) row.emplace_back(c, v[c] * inv);
  pivot_row_[lead] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBasis::insert(const SparseRow& v) {
  std::vector<Coefficient> dense(dimension_);
  for (const auto& [c, x] : v) dense[c] = x;
  return insert(dense);
}

bool EchelonBasis::contains(std::vector<Coefficient> v) const {
  if (v.size() != dimension_) throw PreconditionError("echelon basis: dimension mismatch");
  reduce(v);
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace aluffi
