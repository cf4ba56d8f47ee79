#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamelab/cohomology.hpp"
#include "tamelab/inertia.hpp"
#include "tamelab/neron.hpp"

namespace tamelab {

struct Scenario {
  std::size_t d = 1;
  std::uint64_t p = 0;
  IntMatrix tau = IntMatrix::identity(2);
  std::optional<IntMatrix> polarization;
  std::optional<std::uint64_t> n;
  bool strictly_henselian = false;
  std::vector<std::string> selectors;  // verdict-id prefixes to keep; empty keeps all
  std::uint64_t seed = 0;

  [[nodiscard]] Polarization pol() const {
    return polarization ? Polarization{*polarization} : Polarization::principal(d);
  }
};

/// Validates shape and polarization, then classifies tau.
inline InertiaGenerator validate(const Scenario& s) {
  if (s.d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
  if (s.tau.rows() != 2 * s.d || s.tau.cols() != 2 * s.d) {
    throw Error(ErrorKind::InvalidArgument, "tau must be " + std::to_string(2 * s.d) + "x" + std::to_string(2 * s.d) +
                                                ", got " + std::to_string(s.tau.rows()) + "x" +
                                                std::to_string(s.tau.cols()));
  }
  if (s.polarization) {
    const IntMatrix& l = *s.polarization;
    if (l.rows() != 2 * s.d || l.cols() != 2 * s.d) {
      throw Error(ErrorKind::InvalidArgument, "polarization must have the same size as tau");
    }
    if (determinant(l) == 0) throw Error(ErrorKind::InvalidArgument, "polarization must be nonsingular");
    const IntMatrix jl = standard_symplectic(s.d) * l;
    if (!(jl.transpose() == -jl)) throw Error(ErrorKind::InvalidArgument, "J * polarization must be alternating");
    if (!(s.tau.transpose() * jl * s.tau == jl)) {
      throw Error(ErrorKind::InvalidArgument, "polarization pairing is not preserved by tau");
    }
  }
  if (s.n && *s.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  return classify(s.tau, s.p);
}

struct TorsionSummary {
  Integer fixed_order;
  std::vector<Integer> structure;
};

/// Everything `analyze` reports.
struct AnalysisReport {
  bool semistable = false;
  bool potentially_good = false;
  std::uint64_t min_degree = 1;
  bool purely_additive = false;
  std::optional<NeronInvariants> neron;
  std::map<std::uint64_t, TorsionSummary> torsion;
  std::vector<Verdict> verdicts;
};

namespace detail {

/// Runs a verdict producer; a violated residue-characteristic or hypothesis
/// precondition becomes a non-applicable verdict carrying the message.
inline void collect(std::vector<Verdict>& out, const std::string& id, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    out.push_back(make_verdict(id, false, std::nullopt, "not applicable", e.what()));
  }
}

inline bool coprime_to(std::uint64_t n, std::uint64_t p) { return p == 0 || n % p != 0; }

/// Smallest n >= 5 outside N(k+1) and prime to p.
inline std::uint64_t cohomology_level(std::size_t k, std::uint64_t p) {
  const PrimePowerSet excluded = n_set(static_cast<unsigned>(k + 1));
  for (std::uint64_t n = 5;; ++n) {
    if (!excluded.contains(n) && coprime_to(n, p)) return n;
  }
}

}  // namespace detail

/// Torsion levels reported: 2, 3, 4, 5 and the scenario's n, minus those
/// divisible by p.
inline std::vector<std::uint64_t> report_levels(const Scenario& s) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> cand{2, 3, 4, 5};
  if (s.n) cand.push_back(*s.n);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (auto n : cand) {
    if (detail::coprime_to(n, s.p) && n > 1) out.push_back(n);
  }
  return out;
}

inline AnalysisReport analyze(const Scenario& s, std::uint64_t cap = kDefaultSubgroupCap) {
  const InertiaGenerator g = validate(s);
  const Polarization pol = s.pol();
  AnalysisReport r;
  r.semistable = galois_criterion(g);
  r.potentially_good = g.potentially_good();
  r.min_degree = minimal_semistable_degree(g);
  r.purely_additive = g.purely_additive();
  if (g.potentially_good()) r.neron = neron_invariants(g);

  const auto levels = report_levels(s);
  for (auto n : levels) {
    const Subgroup fix = fixed_subgroup(g.tau, static_cast<Residue>(n));
    r.torsion[n] = {fix.order(), abelian_invariants(fix)};
  }

  auto& v = r.verdicts;
  v.push_back(thm_galois_consistency(g));
  std::vector<std::uint64_t> big;
  for (auto n : levels) {
    if (n >= 5) big.push_back(n);
  }
  for (auto n : big) {
    detail::collect(v, "square-mod-n" + std::to_string(n), [&] { v.push_back(thm_square_mod_n(g, n)); });
    detail::collect(v, "witness-n" + std::to_string(n), [&] { v.push_back(thm_witness(g, n, cap)); });
  }
  for (auto n : levels) {
    detail::collect(v, "fixed-perp-n" + std::to_string(n), [&] { v.push_back(thm_fixed_perp(g, n)); });
  }
  for (std::uint64_t m : {2, 3, 4, 5}) {
    if (detail::coprime_to(m, s.p)) {
      detail::collect(v, "raynaud-m" + std::to_string(m), [&] { v.push_back(raynaud_criterion(g, m)); });
    }
  }
  detail::collect(v, "eigenvalue-degree", [&] { v.push_back(thm_eigenvalue_degree(g, g.semisimple_order)); });
  for (auto n : big) {
    detail::collect(v, "level-structure-n" + std::to_string(n), [&] {
      const auto ls = level_structure_criterion(g, n, pol, cap);
      v.push_back(ls.forward);
      v.push_back(ls.converse);
    });
  }
  detail::collect(v, "level2-lagrangian", [&] { v.push_back(pressred_verdict(g, pol, cap)); });
  for (std::uint64_t n : {2, 3, 4}) {
    detail::collect(v, "witness-degree-n" + std::to_string(n),
                    [&] { v.push_back(exceptional_criterion(g, n, cap).verdict); });
  }
  if (g.d == 1) {
    detail::collect(v, "elliptic", [&] {
      for (auto& e : elliptic_criteria(g)) v.push_back(std::move(e));
    });
  }
  if (g.potentially_good() && g.purely_additive()) {
    detail::collect(v, "additive-good", [&] {
      for (auto& e : paddcor_criteria(g, cap)) v.push_back(std::move(e));
    });
  }
  if (g.potentially_good()) {
    detail::collect(v, "neron-level2", [&] { v.push_back(neron2_verdict(g, pol, cap)); });
    detail::collect(v, "neron-level3", [&] { v.push_back(neron3_verdict(g, pol, cap)); });
    detail::collect(v, "neron-level4a", [&] { v.push_back(neron4_verdict(g, Neron4Mode::TrivialMod2)); });
    detail::collect(v, "neron-level4b", [&] { v.push_back(neron4_verdict(g, Neron4Mode::Lagrangian4, pol, cap)); });
    detail::collect(v, "phi-rank-bound", [&] { v.push_back(component_rank_bound(g)); });
    for (auto n : levels) {
      detail::collect(v, "kernel-count-n" + std::to_string(n), [&] {
        const NeronTorsion t = neron_torsion(g, n);
        v.push_back(make_verdict("kernel-count-n" + std::to_string(n), true, t.identity_holds,
                                 "#ker((tau-1) mod n) = n^(2a) #Phi[n]"));
      });
    }
  }
  for (std::size_t k = 1; k < 2 * g.d; ++k) {
    const std::uint64_t n = detail::cohomology_level(k, s.p);
    detail::collect(v, "cohomology-k" + std::to_string(k), [&] {
      const auto c = highercohcor_classify(g, k, n, s.strictly_henselian);
      v.push_back(c.equivalence);
      if (c.simplified) v.push_back(*c.simplified);
    });
    detail::collect(v, "cohomology-vanishing-k" + std::to_string(k),
                    [&] { v.push_back(hk_vanishing_verdict(g, k, n)); });
  }
  if (!s.selectors.empty()) {
    std::erase_if(v, [&](const Verdict& x) {
      return std::none_of(s.selectors.begin(), s.selectors.end(),
                          [&](const std::string& pre) { return x.id.starts_with(pre); });
    });
  }
  return r;
}

}  // namespace tamelab
