#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tamelab/error.hpp"

namespace tamelab {

using Integer = mpz_class;

/// Dense row-major matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorKind::InvalidArgument, "IntMatrix dimensions must be positive");
    }
  }

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorKind::InvalidArgument, "IntMatrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw Error(ErrorKind::InvalidArgument, "IntMatrix entry count does not match dimensions");
    }
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r.begin(), r.end());
    *this = from_rows(tmp);
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw Error(ErrorKind::InvalidArgument, "IntMatrix dimensions must be positive");
    }
    const std::size_t c = rows.front().size();
    std::vector<Integer> entries;
    entries.reserve(rows.size() * c);
    for (const auto& r : rows) {
      if (r.size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return IntMatrix(rows.size(), c, std::move(entries));
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  /// Diagonal matrix with the given entries.
  static IntMatrix diagonal(const std::vector<Integer>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  [[nodiscard]] const std::vector<Integer>& entries() const noexcept { return data_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : data_) {
      if (e != 0) return false;
    }
    return true;
  }

  [[nodiscard]] bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  IntMatrix& operator+=(const IntMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  IntMatrix& operator-=(const IntMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  IntMatrix& operator*=(const Integer& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator-(IntMatrix a) {
    for (auto& e : a.data_) e = -e;
    return a;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    Integer t;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
      }
    }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Non-negative integer power of a square matrix by repeated squaring.
  [[nodiscard]] IntMatrix pow(unsigned long e) const {
    if (!is_square()) throw Error(ErrorKind::InvalidArgument, "power of non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Rows r0..r0+nr-1 and columns c0..c0+nc-1.
  [[nodiscard]] IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }

  [[nodiscard]] std::vector<std::vector<Integer>> to_rows() const {
    std::vector<std::vector<Integer>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  void require_same_shape(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Standard symplectic form [[0, I_d], [-I_d, 0]].
inline IntMatrix standard_symplectic(std::size_t d) {
  IntMatrix j(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    j(i, d + i) = 1;
    j(d + i, i) = -1;
  }
  return j;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

/// Exact inverse over Q, returned as (adjugate, determinant) so that
/// A * adj = det * I. Throws if A is singular over Q.
inline std::pair<IntMatrix, Integer> adjugate_with_determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<mpq_class> m(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return m[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && at(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(c, j), at(piv, j));
    }
    const mpq_class inv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const mpq_class f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  const Integer det = determinant(a);
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = at(i, n + j) * det;
      v.canonicalize();
      adj(i, j) = v.get_num();
    }
  }
  return {adj, det};
}

/// Inverse of a unimodular integer matrix.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  auto [adj, det] = adjugate_with_determinant(a);
  if (det == 1) return adj;
  if (det == -1) return -adj;
  throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular");
}

}  // namespace tamelab
