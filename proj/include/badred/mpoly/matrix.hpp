#pragma once

#include <string>
#include <utility>
#include <vector>

#include "badred/error.hpp"

namespace badred {

template <class C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  C& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const C& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<C>& data() const { return a_; }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[r * cols_ + j], a_[s * cols_ + j]);
  }

  Matrix select_rows(const std::vector<std::size_t>& rows) const {
    Matrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
    return out;
  }

  template <class D, class F>
  Matrix<D> map(F&& fn) const {
    Matrix<D> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!(x.a_[i] == y.a_[i])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<C> a_;
};

// Fraction-free determinant (Bareiss) over an integral domain; C needs
// divexact. Pivot: first nonzero entry in the column.
template <class C>
C det_bareiss(Matrix<C> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::NonSquare, "determinant of an empty matrix");
  bool negate = false;
  C prev{};
  bool have_prev = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(m(piv, k))) ++piv;
    if (piv == n) return C{};
    if (piv != k) {
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        C v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = have_prev ? divexact(v, prev) : v;
      }
      m(i, k) = C{};
    }
    prev = m(k, k);
    have_prev = true;
  }
  C d = m(n - 1, n - 1);
  return negate ? C(-d) : d;
}

// Reduced row echelon form over a field; returns pivot columns.
template <class C>
std::vector<std::size_t> rref_in_place(Matrix<C>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    C inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      C f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class C>
std::size_t rank_field(Matrix<C> m) {
  return rref_in_place(m).size();
}

// A nonzero kernel vector (over a field) when the columns are dependent.
template <class C>
std::vector<C> kernel_vector(Matrix<C> m, const C& one) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = m.cols();
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == m.cols()) return {};
  std::vector<C> v(m.cols());
  v[free_col] = one;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
  return v;
}

}  // namespace badred
