#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tamelab/int_matrix.hpp"

namespace tamelab {

/// U * A * V = D with U, V unimodular and D diagonal; the diagonal of D is
/// the list of elementary divisors d1 | d2 | ... with zeros last.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> divisors;  // length min(rows, cols)
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] -= q * row[src]
inline void row_submul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_submul(m(dst, j).get_mpz_t(), q.get_mpz_t(), m(src, j).get_mpz_t());
  }
}
inline void col_submul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_submul(m(i, dst).get_mpz_t(), q.get_mpz_t(), m(i, src).get_mpz_t());
  }
}

// Smallest |entry| != 0 in the trailing submatrix, ties broken row-major.
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& d,
                                                                         std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!best || mpz_cmpabs(d(i, j).get_mpz_t(), d(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form with unimodular transforms. The pivot is always the
/// smallest nonzero entry (by absolute value, first in row-major order) of
/// the active submatrix, so the output is a deterministic function of A.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  Integer q;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      auto piv = detail::smallest_pivot(d, t);
      if (!piv) break;
      detail::swap_rows(d, t, piv->first);
      detail::swap_rows(u, t, piv->first);
      detail::swap_cols(d, t, piv->second);
      detail::swap_cols(v, t, piv->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        detail::row_submul(d, i, t, q);
        detail::row_submul(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        detail::col_submul(d, j, t, q);
        detail::col_submul(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (offending) {
        detail::row_submul(d, t, *offending, Integer(-1));
        detail::row_submul(u, t, *offending, Integer(-1));
        continue;
      }
      if (d(t, t) < 0) {
        for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
        for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
      }
      break;
    }
  }

  std::vector<Integer> divs;
  for (std::size_t i = 0; i < std::min(m, n); ++i) divs.push_back(d(i, i));
  return {std::move(u), std::move(d), std::move(v), std::move(divs)};
}

/// Elementary divisors only.
inline std::vector<Integer> elementary_divisors(const IntMatrix& a) {
  return smith_normal_form(a).divisors;
}

/// Invariant factors (> 1) of the torsion subgroup of coker(A) = Z^rows / A Z^cols.
inline std::vector<Integer> cokernel_torsion(const IntMatrix& a) {
  std::vector<Integer> out;
  for (const auto& dv : elementary_divisors(a)) {
    if (dv > 1) out.push_back(dv);
  }
  return out;
}

}  // namespace tamelab
