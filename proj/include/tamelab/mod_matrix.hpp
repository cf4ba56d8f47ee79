#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tamelab/int_matrix.hpp"

namespace tamelab {

using Residue = std::int64_t;

/// Largest modulus accepted; keeps every product of two residues inside
/// a 128-bit intermediate with room to spare.
inline constexpr Residue kMaxModulus = Residue{1} << 31;

inline Residue mod_reduce(Residue v, Residue n) {
  Residue r = v % n;
  return r < 0 ? r + n : r;
}

inline Residue mod_reduce(const Integer& v, Residue n) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  return static_cast<Residue>(r.get_si());
}

inline Residue mod_mul(Residue a, Residue b, Residue n) {
  return static_cast<Residue>((static_cast<__int128>(a) * b) % n);
}

/// Inverse of a modulo n, or 0 when a is not a unit (n = 1 gives 0).
inline Residue mod_inverse(Residue a, Residue n) {
  if (n == 1) return 0;
  Residue old_r = mod_reduce(a, n), r = n;
  Residue old_s = 1, s = 0;
  while (r != 0) {
    const Residue q = old_r / r;
    Residue t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return 0;
  return mod_reduce(old_s, n);
}

/// Matrix over Z/nZ. Entries are always kept in [0, n). Zero rows are
/// allowed so that generator matrices of the trivial subgroup exist.
class ModMatrix {
 public:
  ModMatrix() = default;

  ModMatrix(Residue modulus, std::size_t rows, std::size_t cols)
      : n_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_modulus(modulus);
  }

  ModMatrix(Residue modulus, std::size_t cols, const std::vector<std::vector<Residue>>& rows)
      : n_(modulus), rows_(rows.size()), cols_(cols) {
    check_modulus(modulus);
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged residue matrix rows");
      for (Residue v : r) data_.push_back(mod_reduce(v, n_));
    }
  }

  /// Reduction of an integer matrix modulo n.
  ModMatrix(const IntMatrix& a, Residue modulus) : ModMatrix(modulus, a.rows(), a.cols()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = mod_reduce(a(i, j), n_);
    }
  }

  static ModMatrix identity(Residue modulus, std::size_t size) {
    ModMatrix m(modulus, size, size);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
  }

  [[nodiscard]] Residue modulus() const noexcept { return n_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Residue v) { data_[i * cols_ + j] = mod_reduce(v, n_); }

  [[nodiscard]] const std::vector<Residue>& data() const noexcept { return data_; }

  [[nodiscard]] std::vector<Residue> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  [[nodiscard]] std::vector<std::vector<Residue>> to_rows() const {
    std::vector<std::vector<Residue>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (Residue v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// Representatives in [0, n) as an integer matrix.
  [[nodiscard]] IntMatrix lift() const {
    if (rows_ == 0) throw Error(ErrorKind::InvalidArgument, "cannot lift an empty matrix");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
    }
    return m;
  }

  [[nodiscard]] ModMatrix transpose() const {
    ModMatrix t(n_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    }
    return t;
  }

  friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
    a.require_compatible(b);
    ModMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = (a.data_[k] + b.data_[k]) % a.n_;
    return c;
  }
  friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
    a.require_compatible(b);
    ModMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) {
      c.data_[k] = mod_reduce(a.data_[k] - b.data_[k], a.n_);
    }
    return c;
  }
  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "modulus mismatch");
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    ModMatrix c(a.n_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        __int128 acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) {
          acc += static_cast<__int128>(a(i, k)) * b(k, j);
        }
        c.data_[i * c.cols_ + j] = static_cast<Residue>(acc % a.n_);
      }
    }
    return c;
  }
  friend ModMatrix operator*(Residue s, const ModMatrix& a) {
    ModMatrix c = a;
    const Residue r = mod_reduce(s, a.n_);
    for (auto& v : c.data_) v = mod_mul(v, r, a.n_);
    return c;
  }

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] ModMatrix pow(unsigned long e) const {
    if (!is_square()) throw Error(ErrorKind::InvalidArgument, "power of non-square matrix");
    ModMatrix result = identity(n_, rows_);
    ModMatrix base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << "] mod " << n_;
    return os.str();
  }

 private:
  static void check_modulus(Residue n) {
    if (n < 1 || n > kMaxModulus) {
      throw Error(ErrorKind::InvalidArgument, "modulus must lie in [1, 2^31]");
    }
  }
  void require_compatible(const ModMatrix& o) const {
    if (n_ != o.n_ || rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::InvalidArgument, "residue matrix shape or modulus mismatch");
    }
  }

  Residue n_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// Determinant modulo n (computed over Z on the representatives).
inline Residue determinant(const ModMatrix& a) {
  if (a.rows() == 0) return mod_reduce(1, a.modulus());
  return mod_reduce(determinant(a.lift()), a.modulus());
}

inline bool is_unit(Residue a, Residue n) { return std::gcd(mod_reduce(a, n), n) == 1; }

/// Inverse modulo n via the integer adjugate; throws SingularModN when the
/// determinant is not a unit.
inline ModMatrix inverse(const ModMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const Residue n = a.modulus();
  const Residue det = determinant(a);
  if (!is_unit(det, n)) throw Error(ErrorKind::SingularModN, "determinant is not a unit modulo n");
  if (n == 1) return ModMatrix(n, a.rows(), a.cols());
  auto [adj, det_z] = adjugate_with_determinant(a.lift());
  (void)det_z;
  return mod_inverse(det, n) * ModMatrix(adj, n);
}

}  // namespace tamelab
