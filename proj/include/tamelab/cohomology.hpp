#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tamelab/inertia.hpp"

namespace tamelab {

/// Action of tau on H^k = Lambda^k H^1, with H^1 the dual of the Tate
/// module (n = 0) or of X_n (n > 0).
struct CohomologyAction {
  std::size_t k = 0;
  std::uint64_t n = 0;
  IntMatrix integral;  // set when n == 0
  ModMatrix modular;   // set when n > 0
};

inline CohomologyAction cohomology_action(const IntMatrix& tau, std::size_t k, std::uint64_t n) {
  if (!tau.is_square()) throw Error(ErrorKind::InvalidArgument, "tau must be square");
  if (k > tau.rows()) throw Error(ErrorKind::OutOfRange, "k exceeds the rank");
  CohomologyAction act;
  act.k = k;
  act.n = n;
  if (n == 0) {
    act.integral = exterior_power(inverse_unimodular(tau.transpose()), k);
  } else {
    act.modular = exterior_power(dual_action(ModMatrix(tau, static_cast<Residue>(n))), k);
  }
  return act;
}

/// (A_k - I)^(k+1) = 0 on H^k, mod n, or over Z when n = 0.
inline bool hk_vanishing(const InertiaGenerator& g, std::size_t k, std::uint64_t n) {
  if (k == 0 || k >= 2 * g.d) throw Error(ErrorKind::OutOfRange, "need 0 < k < 2d");
  if (n != 0) detail::require_prime_to_p(g, n, "level");
  const CohomologyAction act = cohomology_action(g.tau, k, n);
  if (n == 0) {
    const IntMatrix diff = act.integral - IntMatrix::identity(act.integral.rows());
    return diff.pow(k + 1).is_zero();
  }
  const ModMatrix diff = act.modular - ModMatrix::identity(static_cast<Residue>(n), act.modular.rows());
  return diff.pow(k + 1).is_zero();
}

/// Semistable, or purely additive and semistable over a quadratic extension.
inline bool semistable_or_quadratic_additive(const InertiaGenerator& g) {
  return galois_criterion(g) || (g.purely_additive() && detail::square_zero(g.tau.pow(2)));
}

struct CohomologyClassification {
  Verdict equivalence;                 // (a) iff (c)
  std::optional<Verdict> simplified;   // even k, finite order: (a) iff tau = +-I
  bool condition_a = false;
  bool condition_c = false;
};

/// For n outside N(k+1): odd k, semistable iff (sigma-1)^(k+1) H^k = 0 mod n;
/// even k under (*), the same with "semistable or purely additive and
/// semistable over a quadratic extension".
inline CohomologyClassification highercohcor_classify(const InertiaGenerator& g, std::size_t k, std::uint64_t n,
                                                      bool strictly_henselian = false) {
  if (k == 0 || k >= 2 * g.d) throw Error(ErrorKind::OutOfRange, "need 0 < k < 2d");
  if (n != 0 && n_set(static_cast<unsigned>(k + 1)).contains(n)) {
    throw Error(ErrorKind::PreconditionExcluded,
                std::to_string(n) + " lies in N(" + std::to_string(k + 1) + "); the equivalence does not apply");
  }
  if (n != 0) detail::require_prime_to_p(g, n, "level");
  CohomologyClassification r;
  const bool even = k % 2 == 0;
  r.condition_a = even ? semistable_or_quadratic_additive(g) : galois_criterion(g);
  r.condition_c = hk_vanishing(g, k, n);
  const std::string id = "cohomology-k" + std::to_string(k) + "-n" + std::to_string(n);
  const bool star = g.p != 2 || strictly_henselian;
  const bool hyp = !even || star;
  r.equivalence = make_verdict(id, hyp, hyp ? std::optional<bool>(r.condition_a == r.condition_c) : std::nullopt,
                               even ? "even k: semistable or quadratic purely additive iff (sigma-1)^(k+1) H^k = 0"
                                    : "odd k: semistable iff (sigma-1)^(k+1) H^k = 0",
                               hyp ? std::string("a=") + (r.condition_a ? "true" : "false") +
                                         " c=" + (r.condition_c ? "true" : "false")
                                   : "needs p != 2 or a strictly henselian valuation ring");
  if (even && g.potentially_good()) {
    const IntMatrix id2 = IntMatrix::identity(g.tau.rows());
    const bool pm = g.tau == id2 || g.tau == -id2;
    r.simplified = make_verdict(id + "-finite-order", true, r.condition_a == pm,
                                "finite order, even k: condition (a) iff tau = I or tau = -I");
  }
  return r;
}

/// Vanishing for semistable tau, and for tau = -I-type when k is even.
inline Verdict hk_vanishing_verdict(const InertiaGenerator& g, std::size_t k, std::uint64_t n) {
  const bool hyp = galois_criterion(g) || (k % 2 == 0 && g.purely_additive() && detail::square_zero(g.tau.pow(2)));
  std::optional<bool> c;
  if (hyp) c = hk_vanishing(g, k, n);
  return make_verdict("cohomology-vanishing-k" + std::to_string(k) + "-n" + std::to_string(n), hyp, c,
                      "semistable (or even k with quadratic purely additive) implies (sigma-1)^(k+1) H^k = 0");
}

/// Probe: vanishing mod n implies the k-parity conclusion over degree R(k+1, n).
inline Verdict hk_extension_probe(const InertiaGenerator& g, std::size_t k, std::uint64_t n,
                                  bool strictly_henselian = false) {
  const RValue rv = compute_R(static_cast<unsigned>(k + 1), n);
  const std::string id = "cohomology-extension-k" + std::to_string(k) + "-n" + std::to_string(n);
  const char* cite = "vanishing mod n implies the conclusion over a totally ramified extension of degree R(k+1, n)";
  if (rv.unbounded || !rv.value.fits_ulong_p()) return make_verdict(id, false, std::nullopt, cite, "R unbounded");
  const std::uint64_t deg = rv.value.get_ui();
  const bool even = k % 2 == 0;
  const bool hyp = hk_vanishing(g, k, n) && (g.p == 0 || deg % g.p != 0) && (!even || g.p != 2 || strictly_henselian);
  std::optional<bool> c;
  if (hyp) {
    InertiaGenerator h = g;
    h.tau = g.tau.pow(deg);
    h.cyclotomic_factors = cyclotomic_factor(char_poly(h.tau));
    c = even ? semistable_or_quadratic_additive(h) : galois_criterion(h);
  }
  return make_verdict(id, hyp, c, cite, "R = " + rv.value.get_str() + "; " + kRCaveat);
}

}  // namespace tamelab
