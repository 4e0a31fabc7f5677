#pragma once

// Dense exact linear algebra over the rationals. Elimination is done
// fraction-free (Bareiss) on an integer copy of the matrix; only the final
// back-substitution divides.

#include <algorithm>
#include <optional>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/rational.hpp"

namespace subinit {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const {
    return std::vector<Rational>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RationalMatrix operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  RationalMatrix select_rows(const std::vector<std::size_t>& idx) const {
    RationalMatrix r(idx.size(), cols_);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t j = 0; j < cols_; ++j) r(a, j) = (*this)(idx[a], j);
    return r;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
  }
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form with its pivot columns. Zero rows are removed,
/// so `rref.rows() == rank`.
struct EchelonForm {
  RationalMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

// Fraction-free forward elimination. Rows are scaled to integers first; the
// Bareiss update keeps every intermediate entry an integer minor.
inline std::vector<std::vector<Integer>> bareiss_echelon(const RationalMatrix& m,
                                                         std::vector<std::size_t>& pivots) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  pivots.clear();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return a;
}

}  // namespace detail

inline EchelonForm reduced_row_echelon(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  auto ech = detail::bareiss_echelon(m, piv);
  std::size_t r = piv.size(), C = m.cols();
  RationalMatrix out(r, C);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < C; ++j) out(i, j) = Rational(ech[i][j]);
  for (std::size_t k = r; k-- > 0;) {
    Rational inv = Rational(1) / out(k, piv[k]);
    for (std::size_t j = 0; j < C; ++j) out(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = out(i, piv[k]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < C; ++j) out(i, j) -= f * out(k, j);
    }
  }
  return {std::move(out), std::move(piv)};
}

inline std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  detail::bareiss_echelon(m, piv);
  return piv.size();
}

/// Basis of {x : m x = 0}, returned as the columns of a cols() x k matrix.
inline RationalMatrix kernel_basis(const RationalMatrix& m) {
  auto e = reduced_row_echelon(m);
  std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> cols;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
    cols.push_back(std::move(v));
  }
  return RationalMatrix::from_columns(cols, C);
}

/// Linearly independent columns spanning the column space (taken from m).
inline RationalMatrix column_space_basis(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  detail::bareiss_echelon(m, piv);
  std::vector<std::vector<Rational>> cols;
  for (auto p : piv) cols.push_back(m.column(p));
  return RationalMatrix::from_columns(cols, m.rows());
}

/// Canonical description of a column space: RREF of the transpose.
inline RationalMatrix column_space_canonical(const RationalMatrix& m) {
  return reduced_row_echelon(m.transpose()).rref;
}

inline bool same_column_space(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return column_space_canonical(a) == column_space_canonical(b);
}

/// Some solution of m x = b, if one exists.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side has the wrong length");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), 0);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rref(k, m.cols());
  return x;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = reduced_row_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

}  // namespace subinit
