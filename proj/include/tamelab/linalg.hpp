#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tamelab/howell.hpp"
#include "tamelab/int_matrix.hpp"
#include "tamelab/mod_matrix.hpp"
#include "tamelab/polynomial.hpp"
#include "tamelab/smith.hpp"

namespace tamelab {

/// det(xI - A), via Faddeev-LeVerrier. Every division is exact over Z.
inline IntPoly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::zero(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    const IntMatrix am = a * m;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer coeff = -tr;
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = coeff;
  }
  return IntPoly(std::move(c));
}

/// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// k-th exterior power: entry (S, T) is the S x T minor, subsets ordered
/// lexicographically. The 0-th power is the 1x1 identity.
inline IntMatrix exterior_power(const IntMatrix& a, std::size_t k) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "exterior power of non-square matrix");
  if (k > a.rows()) throw Error(ErrorKind::OutOfRange, "exterior power degree exceeds dimension");
  if (k == 0) return IntMatrix::identity(1);
  const auto subsets = k_subsets(a.rows(), k);
  IntMatrix out(subsets.size(), subsets.size());
  IntMatrix minor(k, k);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (std::size_t t = 0; t < subsets.size(); ++t) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(subsets[s][i], subsets[t][j]);
      }
      out(s, t) = determinant(minor);
    }
  }
  return out;
}

inline ModMatrix exterior_power(const ModMatrix& a, std::size_t k) {
  if (a.rows() == 0) throw Error(ErrorKind::InvalidArgument, "exterior power of empty matrix");
  return ModMatrix(exterior_power(a.lift(), k), a.modulus());
}

struct UnipotencyResult {
  bool unipotent = false;
  /// Least e with (A - I)^e = 0; 0 for the identity. Empty when not unipotent.
  std::optional<std::size_t> index;
};

inline UnipotencyResult is_unipotent(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "unipotency of non-square matrix");
  const std::size_t r = a.rows();
  const IntMatrix n = a - IntMatrix::identity(r);
  if (n.is_zero()) return {true, 0};
  IntMatrix p = n;
  for (std::size_t e = 1; e <= r; ++e) {
    if (p.is_zero()) return {true, e};
    p = p * n;
  }
  return {false, std::nullopt};
}

inline UnipotencyResult is_unipotent(const ModMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "unipotency of non-square matrix");
  const std::size_t r = a.rows();
  const ModMatrix n = a - ModMatrix::identity(a.modulus(), r);
  if (n.is_zero()) return {true, 0};
  // Over Z/p^e a nilpotent r x r matrix has index at most r * e.
  std::size_t bits = 0;
  for (Residue m = a.modulus(); m > 1; m >>= 1) ++bits;
  ModMatrix p = n;
  for (std::size_t e = 1; e <= r * bits; ++e) {
    if (p.is_zero()) return {true, e};
    p = p * n;
  }
  return {false, std::nullopt};
}

}  // namespace tamelab
