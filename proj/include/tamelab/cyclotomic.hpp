#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamelab/linalg.hpp"
#include "tamelab/polynomial.hpp"

namespace tamelab {

// Small-integer number theory used by the cyclotomic machinery.

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline int mobius(std::uint64_t n) {
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

/// (prime, exponent) when n = prime^exponent with exponent >= 1.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

/// N-th cyclotomic polynomial, as the Moebius product of (x^d - 1).
inline IntPoly cyclotomic_poly(std::uint64_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  IntPoly num{1};
  std::vector<std::uint64_t> denominators;
  for (std::uint64_t d : divisors(order)) {
    const int mu = mobius(order / d);
    if (mu == 1) num = num * IntPoly::x_pow_minus_one(d);
    if (mu == -1) denominators.push_back(d);
  }
  for (std::uint64_t d : denominators) num = num.divmod(IntPoly::x_pow_minus_one(d)).first;
  return num;
}

/// Element of Z[zeta_N] in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint64_t order)
      : order_(order), modulus_(cyclotomic_poly(order)), c_(euler_phi(order)) {}

  CyclotomicInteger(std::uint64_t order, const IntPoly& representative) : CyclotomicInteger(order) {
    assign(representative);
  }

  /// zeta_N^e
  static CyclotomicInteger zeta_power(std::uint64_t order, std::size_t e) {
    return {order, IntPoly::monomial(e)};
  }

  [[nodiscard]] std::uint64_t order() const noexcept { return order_; }
  [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return c_; }

  [[nodiscard]] IntPoly as_poly() const { return IntPoly(c_); }

  friend CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same_field(b);
    CyclotomicInteger r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same_field(b);
    CyclotomicInteger r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    a.require_same_field(b);
    CyclotomicInteger r = a;
    r.assign(a.as_poly() * b.as_poly());
    return r;
  }
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  [[nodiscard]] CyclotomicInteger pow(unsigned e) const {
    CyclotomicInteger r(order_, IntPoly{1});
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Membership in n * Z[zeta_N]: the power basis is a Z-basis.
  [[nodiscard]] bool divisible_by(const Integer& n) const {
    for (const auto& v : c_) {
      if (!mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t())) return false;
    }
    return true;
  }

  /// Matrix of multiplication by this element in the power basis.
  [[nodiscard]] IntMatrix multiplication_matrix() const {
    const std::size_t deg = c_.size();
    IntMatrix m(deg, deg);
    for (std::size_t j = 0; j < deg; ++j) {
      const IntPoly col = (as_poly() * IntPoly::monomial(j)).mod(modulus_);
      for (std::size_t i = 0; i < deg; ++i) m(i, j) = col.coeff(i);
    }
    return m;
  }

 private:
  void assign(const IntPoly& p) {
    const IntPoly r = p.mod(modulus_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = r.coeff(i);
  }
  void require_same_field(const CyclotomicInteger& o) const {
    if (order_ != o.order_) throw Error(ErrorKind::InvalidArgument, "cyclotomic order mismatch");
  }

  std::uint64_t order_;
  IntPoly modulus_;
  std::vector<Integer> c_;
};

/// Prime powers l^m with m(l - 1) <= k (including 1 = l^0), ascending.
struct PrimePowerSet {
  unsigned k = 0;
  std::vector<std::uint64_t> members;

  [[nodiscard]] bool contains(std::uint64_t q) const {
    return std::binary_search(members.begin(), members.end(), q);
  }
};

inline PrimePowerSet n_set(unsigned k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  PrimePowerSet s{k, {1}};
  for (std::uint64_t l = 2; l <= k + 1; ++l) {
    if (prime_power(l) == std::nullopt || prime_power(l)->second != 1) continue;
    std::uint64_t q = 1;
    for (std::uint64_t m = 1; m * (l - 1) <= k; ++m) {
      q *= l;
      s.members.push_back(q);
    }
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

/// Decides (zeta_N - 1)^k in n * Z[zeta_N].
inline bool power_membership(std::uint64_t order, unsigned k, const Integer& n) {
  if (order < 1 || k < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "N, k, n must be positive");
  const CyclotomicInteger z1 = CyclotomicInteger::zeta_power(order, 1) - CyclotomicInteger(order, IntPoly{1});
  return z1.pow(k).divisible_by(n);
}

struct QuasiUnipotenceViolation {
  unsigned k;
  std::uint64_t n;
  std::uint64_t order;
};

struct QuasiUnipotenceReport {
  unsigned k_max;
  std::uint64_t n_max;
  std::uint64_t order_max;
  std::size_t checked = 0;
  std::vector<QuasiUnipotenceViolation> violations;
  [[nodiscard]] bool pass() const { return violations.empty(); }
};

/// Sweeps every (k, n, N) with n outside N(k) and N >= 2 and records any
/// root of unity zeta_N != 1 with (zeta_N - 1)^k in n Z[zeta_N].
inline QuasiUnipotenceReport quasithm_oracle(unsigned k_max, std::uint64_t n_max, std::uint64_t order_max) {
  if (k_max < 1 || n_max < 1 || order_max < 1) throw Error(ErrorKind::InvalidArgument, "bounds must be positive");
  QuasiUnipotenceReport rep{k_max, n_max, order_max, 0, {}};
  for (std::uint64_t order = 2; order <= order_max; ++order) {
    const CyclotomicInteger z1 =
        CyclotomicInteger::zeta_power(order, 1) - CyclotomicInteger(order, IntPoly{1});
    CyclotomicInteger power = z1;
    for (unsigned k = 1; k <= k_max; ++k) {
      if (k > 1) power = power * z1;
      const PrimePowerSet excluded = n_set(k);
      for (std::uint64_t n = 2; n <= n_max; ++n) {
        if (excluded.contains(n)) continue;
        ++rep.checked;
        if (power.divisible_by(Integer(static_cast<unsigned long>(n)))) rep.violations.push_back({k, n, order});
      }
    }
  }
  return rep;
}

/// lcm of all orders N <= bound with (zeta_N - 1)^k in n Z[zeta_N],
/// together with the admissible orders that certify it. For n = 1 every
/// order is admissible and the value is unbounded.
/// Caveat attached to every output that depends on R.
inline constexpr const char* kRCaveat =
    "R is realized as the lcm of admissible orders; identity with the externally defined degree is unverified";

struct RValue {
  unsigned k;
  std::uint64_t n;
  std::uint64_t bound;
  bool unbounded = false;
  Integer value;
  std::vector<std::uint64_t> admissible;
};

inline RValue compute_R(unsigned k, std::uint64_t n, std::uint64_t bound = 1000) {
  if (k < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "k and n must be positive");
  RValue r{k, n, bound, false, 1, {}};
  if (n == 1) {
    r.unbounded = true;
    r.value = 0;
    return r;
  }
  // Admissibility descends to divisors (Z[zeta_N] is free over Z[zeta_M]
  // with 1 in a basis), so N is only tested once every N/q is admissible.
  std::vector<bool> ok(bound + 1, false);
  const Integer nz(static_cast<unsigned long>(n));
  for (std::uint64_t order = 1; order <= bound; ++order) {
    bool candidate = true;
    for (auto [q, e] : factorize(order)) {
      if (!ok[order / q]) {
        candidate = false;
        break;
      }
    }
    if (!candidate) continue;
    ok[order] = power_membership(order, k, nz);
    if (ok[order]) {
      r.admissible.push_back(order);
      mpz_lcm_ui(r.value.get_mpz_t(), r.value.get_mpz_t(), static_cast<unsigned long>(order));
    }
  }
  return r;
}

/// Multiset of cyclotomic factors: N -> multiplicity. Throws
/// NonCyclotomicFactor naming the leftover factor when P is not a product
/// of cyclotomic polynomials.
inline std::map<std::uint64_t, unsigned> cyclotomic_factor(const IntPoly& poly) {
  if (!poly.is_monic()) throw Error(ErrorKind::InvalidArgument, "polynomial must be monic");
  std::map<std::uint64_t, unsigned> out;
  IntPoly rest = poly;
  const std::uint64_t deg = static_cast<std::uint64_t>(poly.degree());
  // phi(N) >= sqrt(N / 2), so N <= 2 deg^2 covers every candidate.
  const std::uint64_t limit = std::max<std::uint64_t>(2, 2 * deg * deg);
  for (std::uint64_t order = 1; order <= limit && rest.degree() > 0; ++order) {
    if (euler_phi(order) > static_cast<std::uint64_t>(rest.degree())) continue;
    const IntPoly phi = cyclotomic_poly(order);
    for (;;) {
      auto [q, r] = rest.divmod(phi);
      if (!r.is_zero()) break;
      rest = q;
      ++out[order];
    }
  }
  if (rest.degree() > 0) {
    throw Error(ErrorKind::NonCyclotomicFactor, "non-cyclotomic factor " + rest.to_string());
  }
  return out;
}

/// For every cyclotomic factor Phi_N of P, decides whether (zeta_N - 1)^2 / n
/// is an algebraic integer: the characteristic polynomial of multiplication
/// by (zeta_N - 1)^2, rescaled by 1/n, must have integer coefficients.
inline bool eigenvalue_integrality(const IntPoly& poly, const Integer& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const auto factors = cyclotomic_factor(poly);
  for (const auto& [order, mult] : factors) {
    (void)mult;
    const CyclotomicInteger z1 =
        CyclotomicInteger::zeta_power(order, 1) - CyclotomicInteger(order, IntPoly{1});
    const IntPoly cp = char_poly(z1.pow(2).multiplication_matrix());
    const std::size_t deg = static_cast<std::size_t>(cp.degree());
    for (std::size_t i = 0; i < deg; ++i) {
      Integer scale;
      mpz_pow_ui(scale.get_mpz_t(), n.get_mpz_t(), deg - i);
      if (!mpz_divisible_p(cp.coeff(i).get_mpz_t(), scale.get_mpz_t())) return false;
    }
  }
  return true;
}

}  // namespace tamelab
