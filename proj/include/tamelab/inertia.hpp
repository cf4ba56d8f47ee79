#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamelab/cyclotomic.hpp"
#include "tamelab/linalg.hpp"
#include "tamelab/torsion.hpp"

namespace tamelab {

/// A validated tame inertia generator acting on Z^(2d): symplectic,
/// quasi-unipotent, with (tau^m - I)^2 = 0 for its semisimple order m, and
/// m prime to the residue characteristic p (p = 0 allowed).
struct InertiaGenerator {
  IntMatrix tau;
  std::uint64_t p = 0;
  std::size_t d = 0;
  std::uint64_t semisimple_order = 1;
  /// Nilpotency index of tau^m - I: 0 when tau has finite order, else 2.
  std::size_t unipotency_index = 0;
  std::map<std::uint64_t, unsigned> cyclotomic_factors;

  [[nodiscard]] bool potentially_good() const { return unipotency_index == 0; }
  [[nodiscard]] bool purely_additive() const { return cyclotomic_factors.count(1) == 0; }
};

/// One evaluated statement. `agree` is false only when the hypotheses hold
/// and the predicted conclusion fails in the model.
struct Verdict {
  std::string id;
  bool hypothesis = false;
  std::optional<bool> conclusion;
  bool agree = true;
  std::string citation;
  std::string note;
};

inline Verdict make_verdict(std::string id, bool hypothesis, std::optional<bool> conclusion, std::string citation,
                            std::string note = {}) {
  Verdict v{std::move(id), hypothesis, conclusion, true, std::move(citation), std::move(note)};
  v.agree = !hypothesis || conclusion.value_or(true);
  return v;
}

inline bool is_symplectic(const IntMatrix& tau) {
  if (!tau.is_square() || tau.rows() % 2 != 0) return false;
  const IntMatrix j = standard_symplectic(tau.rows() / 2);
  return tau.transpose() * j * tau == j;
}

inline InertiaGenerator classify(const IntMatrix& tau, std::uint64_t p = 0) {
  if (!tau.is_square() || tau.rows() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "tau must be a square matrix of even size");
  }
  if (!is_symplectic(tau)) throw Error(ErrorKind::NotSymplectic, "tau^T J tau != J for " + tau.to_string());
  InertiaGenerator g;
  g.tau = tau;
  g.p = p;
  g.d = tau.rows() / 2;
  try {
    g.cyclotomic_factors = cyclotomic_factor(char_poly(tau));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotQuasiUnipotent, e.what());
  }
  std::uint64_t m = 1;
  for (const auto& [order, mult] : g.cyclotomic_factors) m = std::lcm(m, order);
  g.semisimple_order = m;
  const IntMatrix power = tau.pow(m);
  const IntMatrix nil = power - IntMatrix::identity(tau.rows());
  if (nil.is_zero()) {
    g.unipotency_index = 0;
  } else if ((nil * nil).is_zero()) {
    g.unipotency_index = 2;
  } else {
    throw Error(ErrorKind::MonodromyBlockTooLarge,
                "tau^" + std::to_string(m) + " - I is not square-zero; no power of tau is semistable");
  }
  if (p != 0 && std::gcd(p, m) != 1) {
    throw Error(ErrorKind::WildRamification,
                "residue characteristic " + std::to_string(p) + " divides the tame order " + std::to_string(m));
  }
  return g;
}

namespace detail {

inline void require_prime_to_p(const InertiaGenerator& g, std::uint64_t n, const char* what) {
  if (g.p != 0 && n % g.p == 0) {
    throw Error(ErrorKind::ResidueCharacteristic,
                std::string(what) + " " + std::to_string(n) + " is divisible by p = " + std::to_string(g.p));
  }
}

inline bool square_zero(const IntMatrix& a) {
  const IntMatrix n = a - IntMatrix::identity(a.rows());
  return (n * n).is_zero();
}

inline bool square_zero_mod(const IntMatrix& a, Residue n) {
  const ModMatrix m = ModMatrix(a, n) - ModMatrix::identity(n, a.rows());
  return (m * m).is_zero();
}

inline bool preserves_pairing(const IntMatrix& tau, const TorsionModule& module) {
  const ModMatrix t(tau, module.level());
  return t.transpose() * module.gram() * t == module.gram();
}

}  // namespace detail

/// (tau - I)^2 = 0: the in-model definition of semistable reduction.
inline bool galois_criterion(const InertiaGenerator& g) { return detail::square_zero(g.tau); }

/// All eigenvalues equal to 1, read from the cyclotomic factorization.
inline bool all_eigenvalues_one(const InertiaGenerator& g) {
  return g.cyclotomic_factors.size() == 1 && g.cyclotomic_factors.count(1) == 1;
}

inline bool check_sigma_squared_mod_n(const InertiaGenerator& g, std::uint64_t n) {
  detail::require_prime_to_p(g, n, "level");
  return detail::square_zero_mod(g.tau, static_cast<Residue>(n));
}

/// Semistable over a totally ramified tame extension of degree e: tau -> tau^e.
inline bool semistable_after_extension(const InertiaGenerator& g, std::uint64_t e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  detail::require_prime_to_p(g, e, "degree");
  return detail::square_zero(g.tau.pow(e));
}

inline std::uint64_t minimal_semistable_degree(const InertiaGenerator& g) { return g.semisimple_order; }

/// Every cyclotomic factor Phi_N of the characteristic polynomial has N | m.
inline bool eigenvalue_order_check(const InertiaGenerator& g, std::uint64_t m) {
  for (const auto& [order, mult] : g.cyclotomic_factors) {
    if (m % order != 0) return false;
  }
  return true;
}

/// First subgroup S (canonical order) with tau = id on S and on S^perp.
/// The pairing must be tau-invariant; the dual side then carries the same
/// action, so the test is S, S^perp inside the fixed subgroup.
inline std::optional<Subgroup> find_witness_subgroup(const InertiaGenerator& g, const TorsionModule& module,
                                                     std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, static_cast<std::uint64_t>(module.level()), "level");
  if (module.dim() != g.d) throw Error(ErrorKind::InvalidArgument, "module dimension does not match tau");
  if (!detail::preserves_pairing(g.tau, module)) {
    throw Error(ErrorKind::InvalidArgument, "pairing is not preserved by tau");
  }
  const Subgroup fix = fixed_subgroup(g.tau, module);
  if (module.nondegenerate()) {
    // S^perp inside Fix is equivalent to Fix^perp inside S.
    const auto candidates = enumerate_subgroups_between(orthogonal_complement(fix), fix, cap);
    if (candidates.empty()) return std::nullopt;
    return candidates.front();
  }
  for (const auto& s : enumerate_subgroups_of(fix, cap)) {
    if (fix.contains(orthogonal_complement(s))) return s;
  }
  return std::nullopt;
}

/// Same search over every subgroup of the fixed subgroup; reference path.
inline std::optional<Subgroup> find_witness_subgroup_exhaustive(const InertiaGenerator& g, const TorsionModule& module,
                                                                std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, static_cast<std::uint64_t>(module.level()), "level");
  const Subgroup fix = fixed_subgroup(g.tau, module);
  for (const auto& s : enumerate_subgroups_of(fix, cap)) {
    if (fix.contains(orthogonal_complement(s))) return s;
  }
  return std::nullopt;
}

inline std::optional<Subgroup> find_witness_subgroup(const InertiaGenerator& g, std::uint64_t n,
                                                     std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, n, "level");
  return find_witness_subgroup(g, TorsionModule(static_cast<Residue>(n), g.d), cap);
}

/// Raynaud: torsion of level m >= 3 unramified implies semistable.
inline Verdict raynaud_criterion(const InertiaGenerator& g, std::uint64_t m) {
  detail::require_prime_to_p(g, m, "level");
  const bool hyp = ModMatrix(g.tau, static_cast<Residue>(m)) ==
                   ModMatrix::identity(static_cast<Residue>(m), g.tau.rows());
  const bool applies = hyp && m >= 3;
  std::string note;
  if (hyp && m < 3) {
    note = galois_criterion(g) ? "level below 3: no conclusion"
                               : "level below 3: no conclusion, and indeed not semistable";
  }
  return make_verdict("raynaud-m" + std::to_string(m), applies,
                      applies ? std::optional<bool>(galois_criterion(g)) : std::nullopt,
                      "raynaud: tau = I mod m with m >= 3 implies semistable", note);
}

/// Level-n structure: fixed maximal isotropic subgroups w.r.t. e_{lambda,n}.
struct LevelStructureResult {
  Verdict forward;   // fixed Lagrangian exists => semistable
  Verdict converse;  // semistable and (deg, n) = 1 => fixed Lagrangian exists
  std::optional<Subgroup> found;        // a fixed maximal isotropic subgroup, if any
  std::optional<Subgroup> constructed;  // from the converse construction
};

inline TorsionModule polarized_module(const InertiaGenerator& g, std::uint64_t n, const Polarization& pol) {
  const TorsionModule mod = induced_pairing(TorsionModule(static_cast<Residue>(n), g.d), pol);
  if (!detail::preserves_pairing(g.tau, mod)) {
    throw Error(ErrorKind::InvalidArgument, "polarization pairing is not inertia-invariant at this level");
  }
  return mod;
}

/// A fixed maximal isotropic subgroup, if any. Any such L satisfies
/// Fix^perp in L^perp = L in Fix, and when Fix^perp lies in Fix the greedy
/// completion of Fix^perp inside Fix is one; so no search is needed.
inline std::optional<Subgroup> find_fixed_lagrangian(const InertiaGenerator& g, const TorsionModule& mod,
                                                     std::uint64_t /*cap*/ = kDefaultSubgroupCap) {
  if (!mod.nondegenerate()) throw Error(ErrorKind::DegeneratePairing, "pairing is degenerate at this level");
  const Subgroup fix = fixed_subgroup(g.tau, mod);
  if (!fix.contains(orthogonal_complement(fix))) return std::nullopt;
  return extend_to_maximal_isotropic(fix);
}

/// First fixed maximal isotropic subgroup in canonical order by
/// enumeration; reference path.
inline std::optional<Subgroup> find_fixed_lagrangian_exhaustive(const InertiaGenerator& g, const TorsionModule& mod,
                                                                std::uint64_t cap = kDefaultSubgroupCap) {
  if (!mod.nondegenerate()) throw Error(ErrorKind::DegeneratePairing, "pairing is degenerate at this level");
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(mod.level()), g.d);
  const Subgroup fix = fixed_subgroup(g.tau, mod);
  for (const auto& s : enumerate_subgroups_of(fix, cap)) {
    if (s.order() == target && is_maximal_isotropic(s)) return s;
  }
  return std::nullopt;
}

/// Builds a fixed maximal isotropic subgroup for semistable tau when the
/// polarization degree is prime to n: complete Fix^perp inside Fix.
inline Subgroup fixed_lagrangian_from_semistable(const InertiaGenerator& g, std::uint64_t n,
                                                 const Polarization& pol) {
  detail::require_prime_to_p(g, n, "level");
  const Integer deg = pol.degree();
  if (mpz_gcd_ui(nullptr, deg.get_mpz_t(), n) != 1) {
    throw Error(ErrorKind::DegreeObstruction,
                "polarization degree " + deg.get_str() + " shares a factor with " + std::to_string(n));
  }
  if (!galois_criterion(g)) throw Error(ErrorKind::HypothesisNotMet, "tau is not semistable");
  const TorsionModule mod = polarized_module(g, n, pol);
  const Subgroup fix = fixed_subgroup(g.tau, mod);
  return extend_to_maximal_isotropic(fix);
}

inline LevelStructureResult level_structure_criterion(const InertiaGenerator& g, std::uint64_t n,
                                                      const Polarization& pol,
                                                      std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, n, "level");
  const TorsionModule mod = polarized_module(g, n, pol);
  const bool semistable = galois_criterion(g);
  LevelStructureResult r;

  if (mod.nondegenerate()) {
    r.found = find_fixed_lagrangian(g, mod, cap);
    const bool hyp = n >= 5 && r.found.has_value();
    r.forward = make_verdict("level-structure-forward-n" + std::to_string(n), hyp,
                             hyp ? std::optional<bool>(semistable) : std::nullopt,
                             "fixed maximal isotropic subgroup of X_n (n >= 5) implies semistable");
  } else {
    r.forward = make_verdict("level-structure-forward-n" + std::to_string(n), false, std::nullopt,
                             "fixed maximal isotropic subgroup of X_n (n >= 5) implies semistable",
                             "pairing degenerate at this level");
  }

  const bool coprime = mpz_gcd_ui(nullptr, pol.degree().get_mpz_t(), n) == 1;
  const bool hyp2 = semistable && coprime;
  std::optional<bool> concl;
  if (hyp2) {
    r.constructed = fixed_lagrangian_from_semistable(g, n, pol);
    const Subgroup fix = fixed_subgroup(g.tau, mod);
    concl = fix.contains(*r.constructed) && is_maximal_isotropic(*r.constructed);
  }
  r.converse = make_verdict("level-structure-converse-n" + std::to_string(n), hyp2, concl,
                            "semistable with polarization degree prime to n yields a fixed maximal isotropic "
                            "subgroup",
                            coprime ? "" : "degree obstruction");
  return r;
}

/// Level 2 with a fixed maximal isotropic subgroup (p != 2): (tau - I)^2 = 0
/// mod 2 and semistable over the degree-4 totally ramified extension.
inline Verdict pressred_verdict(const InertiaGenerator& g, const Polarization& pol,
                                std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, 2, "level");
  const TorsionModule mod = polarized_module(g, 2, pol);
  const bool hyp = mod.nondegenerate() && find_fixed_lagrangian(g, mod, cap).has_value();
  std::optional<bool> concl;
  if (hyp) concl = detail::square_zero_mod(g.tau, 2) && detail::square_zero(g.tau.pow(4));
  return make_verdict("level2-lagrangian", hyp, concl,
                      "fixed maximal isotropic subgroup of X_2 implies (tau-1)^2 = 0 mod 2 and semistable over "
                      "degree 4");
}

inline Verdict pressred_check(const InertiaGenerator& g, const Polarization& pol,
                              std::uint64_t cap = kDefaultSubgroupCap) {
  Verdict v = pressred_verdict(g, pol, cap);
  if (!v.hypothesis) throw Error(ErrorKind::HypothesisNotMet, "no fixed maximal isotropic subgroup of X_2");
  return v;
}

/// Degree R(n) for the exceptional levels, realized as compute_R(2, n).
inline std::uint64_t exceptional_degree(std::uint64_t n) {
  static std::mutex lock;
  static std::map<std::uint64_t, std::uint64_t> cache;
  {
    const std::lock_guard<std::mutex> guard(lock);
    if (const auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const RValue r = compute_R(2, n);
  if (r.unbounded) throw Error(ErrorKind::InvalidArgument, "R(1) is unbounded");
  const std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(n, r.value.get_ui()).first->second;
}

struct ExceptionalResult {
  Verdict verdict;
  std::optional<Subgroup> witness;
  std::uint64_t degree = 1;
};

/// Witness subgroup at level n implies semistable over every totally
/// ramified extension of degree R(n).
inline ExceptionalResult exceptional_criterion(const InertiaGenerator& g, std::uint64_t n,
                                               std::uint64_t cap = kDefaultSubgroupCap) {
  detail::require_prime_to_p(g, n, "level");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "level must be > 1");
  ExceptionalResult r;
  r.degree = exceptional_degree(n);
  r.witness = find_witness_subgroup(g, n, cap);
  const bool hyp = r.witness.has_value() && (g.p == 0 || r.degree % g.p != 0);
  r.verdict = make_verdict("witness-degree-n" + std::to_string(n), hyp,
                           hyp ? std::optional<bool>(semistable_after_extension(g, r.degree)) : std::nullopt,
                           "witness subgroup at level n implies semistable over degree R(n) = " +
                               std::to_string(r.degree),
                           kRCaveat);
  return r;
}

namespace detail {

inline bool has_point_of_exact_order(const IntMatrix& tau, std::uint64_t k) {
  const auto inv = abelian_invariants(fixed_subgroup(tau, static_cast<Residue>(k)));
  for (const auto& f : inv) {
    if (f == static_cast<unsigned long>(k)) return true;
  }
  return false;
}

inline bool all_fixed(const IntMatrix& tau, Residue n) {
  return fixed_subgroup(tau, n).order() == TorsionModule(n, tau.rows() / 2).order();
}

inline bool exists_semistable_degree_below(const InertiaGenerator& g, std::uint64_t bound) {
  for (std::uint64_t e = 1; e < bound; ++e) {
    if (detail::square_zero(g.tau.pow(e))) return true;
  }
  return false;
}

}  // namespace detail

/// Elliptic-curve clauses (a)-(f): each side evaluated independently.
/// Clauses whose residue-characteristic condition fails are returned with
/// hypothesis = false.
inline std::vector<Verdict> elliptic_criteria(const InertiaGenerator& g) {
  if (g.d != 1) throw Error(ErrorKind::InvalidArgument, "elliptic criteria need d = 1");
  const IntMatrix& t = g.tau;
  const std::uint64_t p = g.p;
  std::vector<Verdict> out;
  auto side = [](bool left, bool right) {
    return std::string("left=") + (left ? "true" : "false") + " right=" + (right ? "true" : "false");
  };

  {
    const bool ok = p != 2;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p != 2";
    if (ok) {
      const bool l = detail::has_point_of_exact_order(t, 2), r = detail::square_zero(t.pow(4));
      c = l == r;
      note = side(l, r);
    }
    out.push_back(make_verdict("elliptic-a", ok, c,
                               "semistable over quartic totally ramified iff invariant point of order 2", note));
  }
  {
    const bool ok = p != 3;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p != 3";
    if (ok) {
      const bool l = detail::has_point_of_exact_order(t, 3), r = detail::square_zero(t.pow(3));
      c = l == r;
      note = side(l, r);
    }
    out.push_back(make_verdict("elliptic-b", ok, c,
                               "semistable over cubic totally ramified iff invariant point of order 3", note));
  }
  {
    const bool ok = p != 2;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p != 2";
    if (ok) {
      const bool l = detail::has_point_of_exact_order(t, 4) || detail::all_fixed(t, 2);
      const bool r = detail::square_zero(t.pow(2));
      c = l == r;
      note = side(l, r);
    }
    out.push_back(make_verdict(
        "elliptic-c", ok, c,
        "semistable over quadratic iff invariant point of order 4 or all 2-torsion invariant", note));
  }
  {
    const bool bad_potentially_good = g.potentially_good() && !t.is_identity();
    const bool ok = p != 2 && bad_potentially_good;
    std::optional<bool> c;
    std::string note = p == 2 ? "needs p != 2" : (bad_potentially_good ? "" : "needs bad, potentially good reduction");
    if (ok) {
      const bool l = !detail::has_point_of_exact_order(t, 4) && detail::all_fixed(t, 2);
      const bool r = t.pow(2).is_identity();
      c = l == r;
      note = side(l, r);
    }
    out.push_back(make_verdict(
        "elliptic-d", ok, c,
        "good over quadratic iff no invariant point of order 4 and all 2-torsion invariant", note));
  }
  {
    const bool ok = p != 2 && p != 3;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p not in {2, 3}";
    if (ok) {
      const bool l = !detail::has_point_of_exact_order(t, 2) && !detail::has_point_of_exact_order(t, 3);
      const bool r = !detail::exists_semistable_degree_below(g, 6);
      c = l == r;
      note = side(l, r);
    }
    out.push_back(make_verdict("elliptic-e", ok, c,
                               "no invariant points of order 2 or 3 iff no semistable extension of degree < 6",
                               note));
  }
  {
    const bool ok = p != 2 && p != 3;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p not in {2, 3}";
    if (ok) {
      const bool l = !detail::has_point_of_exact_order(t, 4) && !detail::has_point_of_exact_order(t, 3) &&
                     !detail::all_fixed(t, 2);
      const bool r = !detail::exists_semistable_degree_below(g, 4);
      c = l == r;
      note = side(l, r);
    }
    out.push_back(make_verdict(
        "elliptic-f", ok, c,
        "no invariant points of order 4 or 3 and not all 2-torsion invariant iff no semistable extension of "
        "degree < 4",
        note));
  }
  return out;
}

/// Purely additive, potentially good reduction: witness at level 4 iff good
/// over a quadratic extension; witness at level 3 iff good over a cubic one.
inline std::vector<Verdict> paddcor_criteria(const InertiaGenerator& g, std::uint64_t cap = kDefaultSubgroupCap) {
  if (!g.potentially_good() || !g.purely_additive()) {
    throw Error(ErrorKind::HypothesisNotMet, "needs purely additive, potentially good reduction");
  }
  std::vector<Verdict> out;
  {
    const bool ok = g.p != 2;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p != 2";
    if (ok) {
      const bool l = find_witness_subgroup(g, 4, cap).has_value();
      const bool r = g.tau.pow(2).is_identity();
      c = l == r;
      note = std::string("witness=") + (l ? "true" : "false") + " good-over-quadratic=" + (r ? "true" : "false");
    }
    out.push_back(make_verdict("additive-good-a", ok, c,
                               "good over quadratic iff witness subgroup of X_4", note));
  }
  {
    const bool ok = g.p != 3;
    std::optional<bool> c;
    std::string note = ok ? "" : "needs p != 3";
    if (ok) {
      const bool l = find_witness_subgroup(g, 3, cap).has_value();
      const bool r = g.tau.pow(3).is_identity();
      c = l == r;
      note = std::string("witness=") + (l ? "true" : "false") + " good-over-cubic=" + (r ? "true" : "false");
    }
    out.push_back(make_verdict("additive-good-b", ok, c,
                               "good over cubic totally ramified iff witness subgroup of X_3", note));
  }
  return out;
}

/// (tau - I)^2 = 0 mod n agrees with semistability once n >= 5.
inline Verdict thm_square_mod_n(const InertiaGenerator& g, std::uint64_t n) {
  const bool hyp = n >= 5 && (g.p == 0 || n % g.p != 0);
  std::optional<bool> c;
  if (hyp) c = check_sigma_squared_mod_n(g, n) == galois_criterion(g);
  return make_verdict("square-mod-n" + std::to_string(n), hyp, c,
                      "for n >= 5 prime to p: semistable iff (tau-1)^2 = 0 on X_n");
}

/// Witness subgroup at level n >= 5 exists iff semistable.
inline Verdict thm_witness(const InertiaGenerator& g, std::uint64_t n, std::uint64_t cap = kDefaultSubgroupCap) {
  const bool hyp = n >= 5 && (g.p == 0 || n % g.p != 0);
  std::optional<bool> c;
  if (hyp) c = find_witness_subgroup(g, n, cap).has_value() == galois_criterion(g);
  return make_verdict("witness-n" + std::to_string(n), hyp, c,
                      "for n >= 5 prime to p: semistable iff some S has inertia trivial on S and S^perp");
}

/// Semistable implies (tau-1)^2 X_n = 0 and inertia trivial on Fix^perp.
inline Verdict thm_fixed_perp(const InertiaGenerator& g, std::uint64_t n) {
  const bool hyp = galois_criterion(g) && (g.p == 0 || n % g.p != 0);
  std::optional<bool> c;
  if (hyp) {
    const Subgroup fix = fixed_subgroup(g.tau, static_cast<Residue>(n));
    c = detail::square_zero_mod(g.tau, static_cast<Residue>(n)) && fix.contains(orthogonal_complement(fix));
  }
  return make_verdict("fixed-perp-n" + std::to_string(n), hyp, c,
                      "semistable implies (tau-1)^2 X_n = 0 and inertia acts trivially on (X_n^I)^perp");
}

/// All eigenvalues m-th roots of unity implies semistable over degree m.
inline Verdict thm_eigenvalue_degree(const InertiaGenerator& g, std::uint64_t m) {
  const bool hyp = eigenvalue_order_check(g, m) && (g.p == 0 || m % g.p != 0);
  std::optional<bool> c;
  if (hyp) c = semistable_after_extension(g, m);
  return make_verdict("eigenvalue-degree-m" + std::to_string(m), hyp, c,
                      "eigenvalues m-th roots of unity imply semistable over totally ramified degree m");
}

/// Galois criterion consistency: square-zero, unipotent, all eigenvalues 1.
inline Verdict thm_galois_consistency(const InertiaGenerator& g) {
  const bool a = galois_criterion(g);
  const bool b = is_unipotent(g.tau).unipotent;
  const bool c = all_eigenvalues_one(g);
  return make_verdict("galois-criterion", true, a == b && b == c,
                      "semistable iff inertia unipotent iff (tau-1)^2 = 0",
                      std::string("square-zero=") + (a ? "true" : "false"));
}

}  // namespace tamelab
