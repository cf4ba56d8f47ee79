#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "tamelab/mod_matrix.hpp"

namespace tamelab {

namespace detail {

using RowVec = std::vector<Residue>;

inline bool row_is_zero(const RowVec& r) {
  for (Residue v : r) {
    if (v != 0) return false;
  }
  return true;
}

// (g, s, t) with s*a + t*b = g = gcd(a, b), for a, b >= 0.
inline void ext_gcd(Residue a, Residue b, Residue& g, Residue& s, Residue& t) {
  Residue old_r = a, r = b, old_s = 1, cs = 0, old_t = 0, ct = 1;
  while (r != 0) {
    const Residue q = old_r / r;
    Residue tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cs;
    old_s = cs;
    cs = tmp;
    tmp = old_t - q * ct;
    old_t = ct;
    ct = tmp;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

// a*x + b*y mod n, elementwise.
inline RowVec combine(const RowVec& x, Residue a, const RowVec& y, Residue b, Residue n) {
  RowVec out(x.size());
  const Residue ar = mod_reduce(a, n), br = mod_reduce(b, n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const __int128 v = static_cast<__int128>(ar) * x[k] + static_cast<__int128>(br) * y[k];
    out[k] = static_cast<Residue>(v % n);
  }
  return out;
}

// A unit u modulo n with u * a == gcd(a, n) (mod n).
inline Residue normalizing_unit(Residue a, Residue n) {
  const Residue g = std::gcd(a, n);
  const Residue m = n / g;
  const Residue a1 = (a / g) % m;
  Residue u = m == 1 ? 0 : mod_inverse(a1, m);
  while (std::gcd(u, n) != 1) u += m;
  return u % n;
}

}  // namespace detail

/// Howell normal form of the row span of A over Z/nZ, zero rows dropped.
/// Two matrices generate the same submodule of (Z/nZ)^cols exactly when
/// their Howell forms are equal.
inline ModMatrix howell_form(const ModMatrix& a) {
  using detail::RowVec;
  const Residue n = a.modulus();
  const std::size_t c = a.cols();
  if (n == 1) return ModMatrix(n, 0, c);

  std::vector<RowVec> work;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RowVec r = a.row(i);
    if (!detail::row_is_zero(r)) work.push_back(std::move(r));
  }

  std::vector<RowVec> result;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t j = 0; j < c && !work.empty(); ++j) {
    RowVec pivot;
    bool have_pivot = false;
    std::vector<RowVec> rest;
    for (auto& r : work) {
      if (r[j] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      if (!have_pivot) {
        pivot = std::move(r);
        have_pivot = true;
        continue;
      }
      Residue g, s, t;
      detail::ext_gcd(pivot[j], r[j], g, s, t);
      RowVec np = detail::combine(pivot, s, r, t, n);
      RowVec nr = detail::combine(pivot, r[j] / g, r, -(pivot[j] / g), n);
      pivot = std::move(np);
      if (!detail::row_is_zero(nr)) rest.push_back(std::move(nr));
    }
    work = std::move(rest);
    if (!have_pivot) continue;
    const Residue u = detail::normalizing_unit(pivot[j], n);
    for (auto& v : pivot) v = mod_mul(v, u, n);
    const Residue g = pivot[j];
    RowVec ann(pivot.size());
    for (std::size_t k = 0; k < pivot.size(); ++k) ann[k] = mod_mul(pivot[k], n / g, n);
    if (!detail::row_is_zero(ann)) work.push_back(std::move(ann));
    result.push_back(std::move(pivot));
    pivot_cols.push_back(j);
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t pc = pivot_cols[i];
    const Residue p = result[i][pc];
    for (std::size_t k = 0; k < i; ++k) {
      const Residue q = result[k][pc] / p;
      if (q != 0) result[k] = detail::combine(result[k], 1, result[i], -q, n);
    }
  }

  return ModMatrix(n, c, result);
}

/// Generators (in Howell form) of {x : A x = 0 mod n}.
inline ModMatrix kernel_mod_n(const ModMatrix& a) {
  const Residue n = a.modulus();
  const std::size_t r = a.rows(), c = a.cols();
  // Row i of the augmented matrix is (A e_i | e_i); the Howell rows whose
  // leading block vanishes span the kernel.
  ModMatrix aug(n, c, r + c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug.set(i, k, a(k, i));
    aug.set(i, r + i, 1);
  }
  const ModMatrix h = howell_form(aug);
  std::vector<std::vector<Residue>> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool leading_zero = true;
    for (std::size_t k = 0; k < r; ++k) {
      if (h(i, k) != 0) {
        leading_zero = false;
        break;
      }
    }
    if (!leading_zero) continue;
    std::vector<Residue> v;
    for (std::size_t k = 0; k < c; ++k) v.push_back(h(i, r + k));
    rows.push_back(std::move(v));
  }
  return howell_form(ModMatrix(n, c, rows));
}

/// Number of elements in the row span of a Howell-form matrix.
inline Integer span_order(const ModMatrix& howell) {
  Integer order = 1;
  for (std::size_t i = 0; i < howell.rows(); ++i) {
    for (std::size_t j = 0; j < howell.cols(); ++j) {
      if (howell(i, j) != 0) {
        order *= howell.modulus() / howell(i, j);
        break;
      }
    }
  }
  return order;
}

}  // namespace tamelab
