#pragma once

// Dense integer matrices and Smith normal form over arbitrary-precision
// integers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burnside/errors.hpp"

namespace burnside {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Int(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product: dimension mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += a * o(k, c);
      }
    return p;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum: dimension mismatch");
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference: dimension mismatch");
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
  }

  Matrix scaled(const Int& k) const {
    Matrix s = *this;
    for (auto& v : s.data_) v *= k;
    return s;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector product: dimension mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  std::vector<Int> column(std::size_t c) const {
    std::vector<Int> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

using IntMatrix = Matrix<long long>;
using BigMatrix = Matrix<BigInt>;

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<To>(m(i, j));
  return r;
}

inline IntMatrix to_int(const BigMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) > BigInt(INT64_MAX) || m(i, j) < BigInt(INT64_MIN)) throw ResourceError("integer overflow converting matrix");
      r(i, j) = static_cast<long long>(m(i, j));
    }
  return r;
}

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r > 0.
struct SmithForm {
  BigMatrix d;
  BigMatrix u;  // rows x rows
  BigMatrix v;  // cols x cols
  std::vector<BigInt> invariants;  // nonzero diagonal entries
  std::size_t rank() const { return invariants.size(); }
};

namespace detail {

inline void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
inline void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
// row a += k * row b
inline void add_row(BigMatrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(b, c) != 0) m(a, c) += k * m(b, c);
}
inline void add_col(BigMatrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, b) != 0) m(r, a) += k * m(r, b);
}
inline void negate_row(BigMatrix& m, std::size_t a) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(a, c) = -m(a, c);
}

// Floor-free quotient rounding toward zero, matching cpp_int division.
inline BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace detail

// Smith normal form by row/column reduction, always pivoting on an entry of
// minimal magnitude in the remaining block.
inline SmithForm smith_normal_form(const BigMatrix& a, bool with_transforms = true) {
  using namespace detail;
  SmithForm s;
  s.d = a;
  const std::size_t rows = a.rows(), cols = a.cols();
  if (with_transforms) {
    s.u = BigMatrix::identity(rows);
    s.v = BigMatrix::identity(cols);
  }
  BigMatrix& d = s.d;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the block.
    bool found = false;
    std::size_t pr = 0, pc = 0;
    BigInt best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (d(r, c) == 0) continue;
        BigInt m = abs(d(r, c));
        if (!found || m < best) {
          found = true;
          best = m;
          pr = r;
          pc = c;
          if (best == 1) goto located;
        }
      }
  located:
    if (!found) break;
    swap_rows(d, t, pr);
    swap_cols(d, t, pc);
    if (with_transforms) {
      swap_rows(s.u, t, pr);
      swap_cols(s.v, t, pc);
    }
    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear column t.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        BigInt q = quot(d(r, t), d(t, t));
        add_row(d, r, t, -q);
        if (with_transforms) add_row(s.u, r, t, -q);
        if (d(r, t) != 0) {
          swap_rows(d, t, r);
          if (with_transforms) swap_rows(s.u, t, r);
          clean = false;
        }
      }
      // Clear row t.
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        BigInt q = quot(d(t, c), d(t, t));
        add_col(d, c, t, -q);
        if (with_transforms) add_col(s.v, c, t, -q);
        if (d(t, c) != 0) {
          swap_cols(d, t, c);
          if (with_transforms) swap_cols(s.v, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d(r, c) % d(t, t) != 0) {
            add_row(d, t, r, BigInt(1));
            if (with_transforms) add_row(s.u, t, r, BigInt(1));
            clean = false;
            break;
          }
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      if (with_transforms) negate_row(s.u, t);
    }
    s.invariants.push_back(d(t, t));
    ++t;
  }
  return s;
}

inline std::vector<BigInt> invariant_factors(const BigMatrix& a) { return smith_normal_form(a, false).invariants; }

// Columns form a basis of the integer kernel {x : A x = 0}.
inline BigMatrix integer_kernel(const BigMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t r = s.rank();
  BigMatrix k(a.cols(), a.cols() - r);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = r; j < a.cols(); ++j) k(i, j - r) = s.v(i, j);
  return k;
}

// An integer solution of A x = b, if one exists.
inline std::optional<std::vector<BigInt>> solve_integer(const SmithForm& s, const std::vector<BigInt>& b) {
  std::vector<BigInt> y = s.u.apply(b);
  const std::size_t r = s.rank();
  std::vector<BigInt> z(s.v.rows(), BigInt(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (y[i] % s.invariants[i] != 0) return std::nullopt;
      z[i] = y[i] / s.invariants[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(z);
}

inline std::optional<std::vector<BigInt>> solve_integer(const BigMatrix& a, const std::vector<BigInt>& b) {
  return solve_integer(smith_normal_form(a), b);
}

// Determinant by fraction-free elimination (Bareiss).
inline BigInt determinant(BigMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  if (n == 0) return BigInt(1);
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return BigInt(0);
      detail::swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace burnside
