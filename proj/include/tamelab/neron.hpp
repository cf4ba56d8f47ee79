#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamelab/inertia.hpp"
#include "tamelab/smith.hpp"

namespace tamelab {

/// Neron-model invariants of a potentially good tau. Phi is the torsion of
/// coker(tau - I) as invariant factors; Phi' drops the p-primary part.
struct NeronInvariants {
  std::size_t d = 0;
  std::size_t a = 0;
  std::size_t u = 0;
  std::size_t t = 0;
  std::uint64_t p = 0;
  std::vector<Integer> phi;
  std::vector<Integer> phi_prime;

  [[nodiscard]] Integer phi_prime_order() const {
    Integer o = 1;
    for (const auto& f : phi_prime) o *= f;
    return o;
  }
};

namespace detail {

inline Integer strip_prime(Integer v, std::uint64_t p) {
  if (p == 0) return v;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) v /= static_cast<unsigned long>(p);
  return v;
}

inline void require_potentially_good(const InertiaGenerator& g) {
  if (!g.potentially_good()) throw Error(ErrorKind::NotPotentiallyGood, "tau has infinite order");
}

inline bool all_equal_to(const std::vector<Integer>& v, unsigned long q) {
  for (const auto& x : v) {
    if (x != q) return false;
  }
  return true;
}

inline Integer ui_pow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace detail

inline NeronInvariants neron_invariants(const InertiaGenerator& g) {
  detail::require_potentially_good(g);
  NeronInvariants inv;
  inv.d = g.d;
  inv.p = g.p;
  const IntMatrix diff = g.tau - IntMatrix::identity(g.tau.rows());
  std::size_t zeros = 0;
  for (const auto& e : elementary_divisors(diff)) {
    if (e == 0) {
      ++zeros;
    } else if (e > 1) {
      inv.phi.push_back(e);
      const Integer s = detail::strip_prime(e, g.p);
      if (s > 1) inv.phi_prime.push_back(s);
    }
  }
  inv.a = zeros / 2;
  inv.u = g.d - inv.a;
  return inv;
}

/// Level-n torsion data and the count #ker((tau - I) mod n) = n^(2a) #Phi[n].
struct NeronTorsion {
  std::uint64_t n = 0;
  Integer fixed_order;
  std::vector<Integer> structure;
  std::size_t two_a = 0;
  std::vector<Integer> phi_n;
  Integer predicted_order;
  bool identity_holds = false;
  std::optional<std::size_t> b;  // set when the fixed subgroup is (Z/n)^b
};

inline NeronTorsion neron_torsion(const InertiaGenerator& g, std::uint64_t n) {
  detail::require_prime_to_p(g, n, "level");
  detail::require_potentially_good(g);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
  const NeronInvariants inv = neron_invariants(g);
  NeronTorsion r;
  r.n = n;
  const Subgroup fix = fixed_subgroup(g.tau, static_cast<Residue>(n));
  r.fixed_order = fix.order();
  r.structure = abelian_invariants(fix);
  r.two_a = 2 * inv.a;
  Integer phi_n_order = 1;
  for (const auto& f : inv.phi) {
    Integer gcd;
    mpz_gcd_ui(gcd.get_mpz_t(), f.get_mpz_t(), n);
    if (gcd > 1) r.phi_n.push_back(gcd);
    phi_n_order *= gcd;
  }
  r.predicted_order = detail::ui_pow(n, r.two_a) * phi_n_order;
  r.identity_holds = r.predicted_order == r.fixed_order;
  if (n == 1) {
    r.b = 0;
  } else if (detail::all_equal_to(r.structure, n)) {
    r.b = r.structure.size();
  }
  return r;
}

namespace detail {

struct Clauses {
  bool all = true;
  std::string failed;
  void check(bool ok, const char* name) {
    if (ok) return;
    all = false;
    failed += failed.empty() ? name : std::string(",") + name;
  }
  [[nodiscard]] std::string note() const { return all ? std::string() : "failed: " + failed; }
};

/// Fixed maximal isotropic subgroup of X_n w.r.t. e_{lambda,n}; reason on failure.
inline std::pair<bool, std::string> fixed_lagrangian_exists(const InertiaGenerator& g, std::uint64_t n,
                                                           const Polarization& pol, std::uint64_t cap) {
  const TorsionModule mod = polarized_module(g, n, pol);
  if (!mod.nondegenerate()) return {false, "pairing degenerate at level " + std::to_string(n)};
  if (!find_fixed_lagrangian(g, mod, cap)) return {false, "no fixed maximal isotropic subgroup"};
  return {true, ""};
}

inline Verdict require_hypothesis(Verdict v) {
  if (!v.hypothesis) throw Error(ErrorKind::HypothesisNotMet, v.id + ": " + v.note);
  return v;
}

}  // namespace detail

/// Level-2 Lagrangian: Phi' elementary abelian 2-group of rank b - 2a,
/// [X_2 : X_2(F)] #Phi' = 2^(2u), and good iff Phi' = 0 and X_2 fixed.
inline Verdict neron2_verdict(const InertiaGenerator& g, const Polarization& pol,
                              std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, 2, "level");
  const char* cite = "level-2 Lagrangian: Phi' = (Z/2)^(b-2a) and [X_2 : X_2(F)] #Phi' = 2^(2u)";
  if (!g.potentially_good()) return make_verdict("neron-level2", false, std::nullopt, cite, "not potentially good");
  auto [hyp, why] = detail::fixed_lagrangian_exists(g, 2, pol, cap);
  if (!hyp) return make_verdict("neron-level2", false, std::nullopt, cite, why);
  const NeronInvariants inv = neron_invariants(g);
  const NeronTorsion tor = neron_torsion(g, 2);
  detail::Clauses c;
  c.check(detail::all_equal_to(inv.phi_prime, 2), "elementary");
  c.check(tor.b.has_value() && *tor.b >= 2 * inv.a && inv.phi_prime.size() == *tor.b - 2 * inv.a, "rank");
  const Integer index = detail::ui_pow(2, 2 * g.d) / tor.fixed_order;
  c.check(index * inv.phi_prime_order() == detail::ui_pow(2, 2 * inv.u), "index");
  const bool good = g.tau.is_identity();
  c.check(good == (inv.phi_prime.empty() && tor.fixed_order == detail::ui_pow(2, 2 * g.d)), "good");
  return make_verdict("neron-level2", true, c.all, cite, c.note());
}

inline Verdict verify_neron2(const InertiaGenerator& g, const Polarization& pol,
                             std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_potentially_good(g);
  return detail::require_hypothesis(neron2_verdict(g, pol, cap));
}

/// Level-3 Lagrangian: X_3(F) = (Z/3)^(2d-u), Phi' = (Z/3)^u, good iff X_3
/// fixed, purely additive iff X_3(F) = (Z/3)^d.
inline Verdict neron3_verdict(const InertiaGenerator& g, const Polarization& pol,
                              std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, 3, "level");
  const char* cite = "level-3 Lagrangian: X_3(F) = (Z/3)^(2d-u) and Phi' = (Z/3)^u";
  if (!g.potentially_good()) return make_verdict("neron-level3", false, std::nullopt, cite, "not potentially good");
  auto [hyp, why] = detail::fixed_lagrangian_exists(g, 3, pol, cap);
  if (!hyp) return make_verdict("neron-level3", false, std::nullopt, cite, why);
  const NeronInvariants inv = neron_invariants(g);
  const NeronTorsion tor = neron_torsion(g, 3);
  detail::Clauses c;
  c.check(tor.b.has_value() && *tor.b == 2 * g.d - inv.u, "fixed");
  c.check(detail::all_equal_to(inv.phi_prime, 3) && inv.phi_prime.size() == inv.u, "phi");
  c.check(g.tau.is_identity() == (tor.b == 2 * g.d), "good");
  c.check(g.purely_additive() == (tor.b == g.d), "additive");
  return make_verdict("neron-level3", true, c.all, cite, c.note());
}

inline Verdict verify_neron3(const InertiaGenerator& g, const Polarization& pol,
                             std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_potentially_good(g);
  return detail::require_hypothesis(neron3_verdict(g, pol, cap));
}

enum class Neron4Mode { TrivialMod2, Lagrangian4 };

/// X_4(F) = (Z/4)^(2a) x (Z/2)^(2u), Phi' = (Z/2)^(2u), plus the index,
/// good-reduction and purely-additive clauses.
inline Verdict neron4_verdict(const InertiaGenerator& g, Neron4Mode mode,
                              const std::optional<Polarization>& pol = std::nullopt,
                              std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, 2, "level");
  const std::string id = mode == Neron4Mode::TrivialMod2 ? "neron-level4a" : "neron-level4b";
  const char* cite = "X_2 fixed or level-4 Lagrangian: X_4(F) = (Z/4)^(2a) x (Z/2)^(2u) and Phi' = (Z/2)^(2u)";
  if (!g.potentially_good()) return make_verdict(id, false, std::nullopt, cite, "not potentially good");
  if (mode == Neron4Mode::TrivialMod2) {
    if (!(ModMatrix(g.tau, 2) == ModMatrix::identity(2, g.tau.rows()))) {
      return make_verdict(id, false, std::nullopt, cite, "tau is not trivial mod 2");
    }
  } else {
    auto [hyp, why] = detail::fixed_lagrangian_exists(g, 4, pol.value_or(Polarization::principal(g.d)), cap);
    if (!hyp) return make_verdict(id, false, std::nullopt, cite, why);
  }
  const NeronInvariants inv = neron_invariants(g);
  const NeronTorsion tor = neron_torsion(g, 4);
  std::vector<Integer> expected(2 * inv.u, Integer(2));
  expected.insert(expected.end(), 2 * inv.a, Integer(4));
  detail::Clauses c;
  c.check(tor.structure == expected, "structure");
  c.check(detail::all_equal_to(inv.phi_prime, 2) && inv.phi_prime.size() == 2 * inv.u, "phi");
  const TorsionModule x4(4, g.d);
  const Subgroup fix = fixed_subgroup(g.tau, x4);
  const Subgroup x2 = Subgroup(x4, 2 * ModMatrix::identity(4, 2 * g.d));
  c.check(fix.contains(x2), "contains-x2");
  c.check(x4.order() / fix.order() == detail::ui_pow(2, 2 * inv.u), "index");
  c.check(fix.order() / x2.order() == detail::ui_pow(2, 2 * inv.a), "index-x2");
  c.check(g.tau.is_identity() == (fix.order() == x4.order()), "good");
  c.check(g.purely_additive() == (fix == x2), "additive");
  return make_verdict(id, true, c.all, cite, c.note());
}

inline Verdict verify_neron4(const InertiaGenerator& g, Neron4Mode mode,
                             const std::optional<Polarization>& pol = std::nullopt,
                             std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_potentially_good(g);
  return detail::require_hypothesis(neron4_verdict(g, mode, pol, cap));
}

/// Torsion of coker(A - I) killed by l^(r-1) when A has finite order and
/// (A - I)^(m (l-1) l^(r-1)) = 0 mod l^m.
inline Verdict randm_verdict(const IntMatrix& a, std::uint64_t ell, std::uint64_t m, std::uint64_t r) {
  if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "A must be square");
  if (r <= 1) throw Error(ErrorKind::InvalidArgument, "r must exceed 1");
  if (ell < 2 || factorize(ell).size() != 1 || factorize(ell)[0].second != 1) {
    throw Error(ErrorKind::InvalidArgument, "l must be prime");
  }
  const char* cite = "finite order A with (A-1)^(m(l-1)l^(r-1)) in l^m End(M): torsion of M/(A-1)M killed by l^(r-1)";
  std::uint64_t order = 1;
  try {
    for (const auto& [n, mult] : cyclotomic_factor(char_poly(a))) order = std::lcm(order, n);
  } catch (const Error&) {
    return make_verdict("torsion-killed", false, std::nullopt, cite, "A is not of finite order");
  }
  const IntMatrix id = IntMatrix::identity(a.rows());
  if (!(a.pow(order) == id)) return make_verdict("torsion-killed", false, std::nullopt, cite, "A is not of finite order");
  const Integer lm = detail::ui_pow(ell, m);
  if (!lm.fits_slong_p() || lm > kMaxModulus) throw Error(ErrorKind::OutOfRange, "l^m too large");
  const std::uint64_t exponent = m * (ell - 1) * detail::ui_pow(ell, r - 1).get_ui();
  const ModMatrix diff = ModMatrix(a, lm.get_si()) - ModMatrix::identity(lm.get_si(), a.rows());
  if (!diff.pow(exponent).is_zero()) {
    return make_verdict("torsion-killed", false, std::nullopt, cite, "(A-1) power not divisible by l^m");
  }
  const Integer bound = detail::ui_pow(ell, r - 1);
  bool killed = true;
  for (const auto& e : cokernel_torsion(a - id)) {
    Integer part = 1, v = e;
    while (mpz_divisible_ui_p(v.get_mpz_t(), ell)) {
      v /= static_cast<unsigned long>(ell);
      part *= static_cast<unsigned long>(ell);
    }
    if (!mpz_divisible_p(bound.get_mpz_t(), part.get_mpz_t())) killed = false;
  }
  return make_verdict("torsion-killed", true, killed, cite);
}

inline Verdict randm_check(const IntMatrix& a, std::uint64_t ell, std::uint64_t m, std::uint64_t r) {
  return detail::require_hypothesis(randm_verdict(a, ell, m, r));
}

/// Elementary abelian l-group Phi' has rank at most 2u (l = 2) or u (l = 3).
inline Verdict component_rank_bound(const InertiaGenerator& g) {
  const char* cite = "elementary abelian Phi' has rank <= 2u (2-group) or <= u (3-group)";
  if (!g.potentially_good()) return make_verdict("phi-rank-bound", false, std::nullopt, cite, "not potentially good");
  const NeronInvariants inv = neron_invariants(g);
  if (!inv.phi_prime.empty() && detail::all_equal_to(inv.phi_prime, 2) && g.p != 2) {
    return make_verdict("phi-rank-bound", true, inv.phi_prime.size() <= 2 * inv.u, cite);
  }
  if (!inv.phi_prime.empty() && detail::all_equal_to(inv.phi_prime, 3) && g.p != 3) {
    return make_verdict("phi-rank-bound", true, inv.phi_prime.size() <= inv.u, cite);
  }
  return make_verdict("phi-rank-bound", false, std::nullopt, cite, "Phi' not elementary abelian 2 or 3");
}

}  // namespace tamelab
