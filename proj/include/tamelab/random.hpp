#pragma once

#include <cstdint>
#include <random>

#include "tamelab/int_matrix.hpp"

namespace tamelab {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return mix64(mix64(seed) ^ index); }

/// mt19937_64 with a portable bounded draw (std distributions are
/// implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

struct ConjugationOptions {
  unsigned transvections = 4;
  long max_entry = 2;  // entries of the transvection vectors lie in [-max_entry, max_entry]
  unsigned permutations = 1;
};

/// Transvection x -> x + c <v, x> v with <v, x> = v^T J x.
inline IntMatrix symplectic_transvection(const std::vector<long>& v, long c) {
  const std::size_t r = v.size();
  const std::size_t d = r / 2;
  IntMatrix vj(1, r);  // v^T J
  for (std::size_t j = 0; j < d; ++j) {
    vj(0, d + j) = v[j];
    vj(0, j) = -v[d + j];
  }
  IntMatrix t = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) t(i, j) += Integer(c) * v[i] * vj(0, j);
  }
  return t;
}

/// Symplectic plane permutation (e_i, e_(d+i)) <-> (e_j, e_(d+j)), optionally
/// followed by the quarter turn e_i -> e_(d+i), e_(d+i) -> -e_i.
inline IntMatrix plane_permutation(std::size_t d, std::size_t i, std::size_t j, bool rotate) {
  IntMatrix p = IntMatrix::identity(2 * d);
  if (i != j) {
    for (std::size_t a : {i, d + i, j, d + j}) p(a, a) = 0;
    p(j, i) = 1;
    p(i, j) = 1;
    p(d + j, d + i) = 1;
    p(d + i, d + j) = 1;
  }
  if (rotate) {
    IntMatrix q = IntMatrix::identity(2 * d);
    q(i, i) = 0;
    q(d + i, d + i) = 0;
    q(d + i, i) = 1;
    q(i, d + i) = -1;
    p = q * p;
  }
  return p;
}

/// Inverse of a symplectic matrix: U^-1 = -J U^T J.
inline IntMatrix symplectic_inverse(const IntMatrix& u) {
  const IntMatrix j = standard_symplectic(u.rows() / 2);
  return -(j * u.transpose() * j);
}

/// Random element of Sp_2d(Z): a product of transvections and plane
/// permutations drawn from `rng`.
inline IntMatrix random_symplectic(std::size_t d, Rng& rng, const ConjugationOptions& opt = {}) {
  IntMatrix u = IntMatrix::identity(2 * d);
  for (unsigned t = 0; t < opt.transvections; ++t) {
    std::vector<long> v(2 * d);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : v) {
        x = rng.range(-opt.max_entry, opt.max_entry);
        nonzero = nonzero || x != 0;
      }
    }
    const long c = rng.below(2) ? 1 : -1;
    u = symplectic_transvection(v, c) * u;
  }
  for (unsigned t = 0; t < opt.permutations; ++t) {
    const std::size_t i = rng.below(d), j = rng.below(d);
    u = plane_permutation(d, i, j, rng.below(2) == 1) * u;
  }
  return u;
}

struct Conjugated {
  IntMatrix tau;
  IntMatrix u;  // tau = u * base * u^-1
};

inline Conjugated random_symplectic_conjugate(const IntMatrix& base, std::uint64_t seed,
                                              const ConjugationOptions& opt = {}) {
  Rng rng(seed);
  const IntMatrix u = random_symplectic(base.rows() / 2, rng, opt);
  return {u * base * symplectic_inverse(u), u};
}

}  // namespace tamelab
