#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tamelab/generate.hpp"
#include "tamelab/report.hpp"
#include "tamelab/smith.hpp"

namespace tamelab {

/// Outcome of one trial: how many checks ran, how many had their
/// hypotheses met, and serialized counterexamples.
struct TrialOutcome {
  std::size_t checked = 0;
  std::size_t hypothesis_met = 0;
  std::vector<Json> failures;

  void check(bool ok, const std::function<Json()>& describe) {
    ++checked;
    if (!ok) failures.push_back(describe());
  }
  void verdict(const Verdict& v, const std::function<Json()>& context) {
    ++checked;
    if (v.hypothesis) ++hypothesis_met;
    if (!v.agree) {
      Json j = context();
      j["verdict"] = to_json(v);
      failures.push_back(std::move(j));
    }
  }
  void absorb(TrialOutcome&& o) {
    checked += o.checked;
    hypothesis_met += o.hypothesis_met;
    for (auto& f : o.failures) failures.push_back(std::move(f));
  }
};

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t dmax = 2;
  unsigned threads = 1;
  std::size_t max_counterexamples = 20;
};

struct SuiteReport {
  std::string suite;
  std::string regime;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t dmax = 0;
  std::size_t instances = 0;
  std::size_t checked = 0;
  std::size_t hypothesis_met = 0;
  std::size_t violations = 0;
  std::vector<Json> counterexamples;
  std::vector<std::string> notes;

  [[nodiscard]] bool pass() const { return violations == 0; }
};

inline Json to_json(const SuiteReport& r) {
  Json j{{"suite", r.suite},
         {"regime", r.regime},
         {"trials", r.trials},
         {"seed", r.seed},
         {"dmax", r.dmax},
         {"instances", r.instances},
         {"checked", r.checked},
         {"hypothesis_met", r.hypothesis_met},
         {"violations", r.violations},
         {"pass", r.pass()},
         {"counterexamples", r.counterexamples},
         {"notes", r.notes}};
  return j;
}

/// Runs fn(0..count-1) on `threads` workers; results are kept by index so
/// the aggregate does not depend on scheduling.
inline std::vector<TrialOutcome> run_indexed(std::size_t count, unsigned threads,
                                             const std::function<TrialOutcome(std::size_t)>& fn) {
  std::vector<TrialOutcome> out(count);
  std::vector<std::string> errors(count);
  auto work = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = TrialOutcome{};
      out[i].checked = 1;
      out[i].failures.push_back(Json{{"index", i}, {"error", e.what()}});
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) work(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

namespace detail {

inline SuiteReport aggregate(const std::string& suite, const std::string& regime, const SuiteOptions& opt,
                             std::vector<TrialOutcome>&& outcomes) {
  SuiteReport r;
  r.suite = suite;
  r.regime = regime;
  r.trials = opt.trials;
  r.seed = opt.seed;
  r.dmax = opt.dmax;
  r.instances = outcomes.size();
  for (auto& o : outcomes) {
    r.checked += o.checked;
    r.hypothesis_met += o.hypothesis_met;
    r.violations += o.failures.size();
    for (auto& f : o.failures) {
      if (r.counterexamples.size() < opt.max_counterexamples) r.counterexamples.push_back(std::move(f));
    }
  }
  return r;
}

/// Instance i: catalog entry i, or a random conjugate of a random catalog
/// entry for i past the catalog.
struct Sample {
  std::string label;
  IntMatrix tau;
  IntMatrix base;
  IntMatrix u;
};

inline Sample catalog_or_conjugate(const std::vector<CatalogEntry>& cat, std::uint64_t seed, std::size_t i) {
  const std::size_t d1 = cat.front().tau.rows() / 2;
  if (i < cat.size()) return {cat[i].name, cat[i].tau, cat[i].tau, IntMatrix::identity(cat[i].tau.rows())};
  (void)d1;
  Rng rng(trial_seed(seed, i));
  const auto& e = cat[rng.below(cat.size())];
  const Conjugated c = random_symplectic_conjugate(e.tau, rng.next());
  return {"conj(" + e.name + ")", c.tau, e.tau, c.u};
}

inline Json describe(const Sample& s, std::uint64_t p = 0) {
  return Json{{"label", s.label}, {"tau", to_json(s.tau)}, {"p", p}};
}

inline std::vector<CatalogEntry> filtered(std::size_t dmax, bool finite_only, std::size_t dmin = 1) {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog(dmax, finite_only)) {
    if (e.tau.rows() / 2 >= dmin) out.push_back(std::move(e));
  }
  return out;
}

inline SuiteReport catalog_suite(const std::string& id, const SuiteOptions& opt, const std::vector<CatalogEntry>& cat,
                                 const std::function<void(const Sample&, TrialOutcome&)>& body) {
  auto outcomes = run_indexed(cat.size() + opt.trials, opt.threads, [&](std::size_t i) {
    TrialOutcome o;
    body(catalog_or_conjugate(cat, opt.seed, i), o);
    return o;
  });
  return aggregate(id, "catalog+conjugates", opt, std::move(outcomes));
}

// --- Individual suites ----------------------------------------------------

inline SuiteReport suite_square_mod_n(const SuiteOptions& opt) {
  return catalog_suite("square-mod-n-equivalence", opt, catalog(std::min<std::size_t>(opt.dmax, 2)),
                       [](const Sample& s, TrialOutcome& o) {
                         const InertiaGenerator g = classify(s.tau, 0);
                         for (std::uint64_t n : {5, 6, 7, 9, 25}) {
                           o.verdict(thm_square_mod_n(g, n), [&] {
                             Json j = describe(s);
                             j["n"] = n;
                             return j;
                           });
                         }
                       });
}

inline SuiteReport suite_witness(const SuiteOptions& opt) {
  return catalog_suite(
      "witness-equivalence", opt, catalog(std::min<std::size_t>(opt.dmax, 2)), [](const Sample& s, TrialOutcome& o) {
        const InertiaGenerator g = classify(s.tau, 0);
        const TorsionModule mod(5, g.d);
        const auto fast = find_witness_subgroup(g, mod);
        const auto full = find_witness_subgroup_exhaustive(g, mod);
        o.check(fast.has_value() == full.has_value() && (!fast || *fast == *full), [&] {
          Json j = describe(s);
          j["detail"] = "interval search and exhaustive search disagree";
          return j;
        });
        o.verdict(make_verdict("witness-n5", true, full.has_value() == galois_criterion(g),
                               "for n >= 5 prime to p: semistable iff some S has inertia trivial on S and S^perp"),
                  [&] { return describe(s); });
        if (full) {
          const Subgroup fix = fixed_subgroup(g.tau, mod);
          o.check(fix.contains(*full) && fix.contains(orthogonal_complement(*full)), [&] {
            Json j = describe(s);
            j["detail"] = "witness not fixed";
            return j;
          });
        }
      });
}

inline SuiteReport suite_quasithm(const SuiteOptions& opt) {
  auto outcomes = run_indexed(1, 1, [](std::size_t) {
    TrialOutcome o;
    const QuasiUnipotenceReport rep = quasithm_oracle(4, 30, 60);
    o.checked += rep.checked;
    for (const auto& v : rep.violations) {
      o.failures.push_back(Json{{"k", v.k}, {"n", v.n}, {"N", v.order}, {"detail", "membership outside N(k)"}});
    }
    for (auto [order, k, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned long>>{
             {2, 2, 4}, {4, 2, 2}, {3, 2, 3}}) {
      o.check(power_membership(order, k, Integer(n)), [&, order = order, k = k, n = n] {
        return Json{{"k", k}, {"n", n}, {"N", order}, {"detail", "boundary witness not a member"}};
      });
    }
    // Every q = l^m in N(k) is reached by the l-th roots of unity.
    for (unsigned k = 1; k <= 6; ++k) {
      for (std::uint64_t q : n_set(k).members) {
        if (q == 1) continue;
        const std::uint64_t ell = prime_power(q)->first;
        o.check(power_membership(ell, k, Integer(static_cast<unsigned long>(q))), [&] {
          return Json{{"k", k}, {"n", q}, {"N", ell}, {"detail", "N(k) member without a boundary witness"}};
        });
      }
      if (k < 6) {
        const auto a = n_set(k).members, b = n_set(k + 1).members;
        o.check(std::includes(b.begin(), b.end(), a.begin(), a.end()),
                [&] { return Json{{"k", k}, {"detail", "N(k) not contained in N(k+1)"}}; });
      }
    }
    for (std::uint64_t order = 2; order <= 30; ++order) {
      for (unsigned k = 1; k < 6; ++k) {
        for (unsigned long n = 2; n <= 12; ++n) {
          const bool here = power_membership(order, k, Integer(n));
          o.check(!here || power_membership(order, k + 1, Integer(n)), [&] {
            return Json{{"k", k}, {"n", n}, {"N", order}, {"detail", "membership not monotone in k"}};
          });
        }
      }
    }
    return o;
  });
  SuiteReport r = aggregate("quasithm-sweep", "exhaustive", opt, std::move(outcomes));
  r.notes.push_back("sweep k <= 4, n <= 30, N <= 60; boundary witnesses (2,2,4), (4,2,2), (3,2,3)");
  return r;
}

inline Json describe(const GeneratedInstance& inst) {
  Json j = to_json(inst.scenario);
  j["label"] = inst.label;
  if (inst.witness) j["witness"] = to_json(inst.witness->gens());
  return j;
}

/// Checks that the emitted witness really is a fixed maximal isotropic
/// subgroup for the scenario's pairing.
inline void check_witness(const GeneratedInstance& inst, TrialOutcome& o) {
  if (!inst.witness) return;
  const Residue n = inst.witness->parent().level();
  const Subgroup fix = fixed_subgroup(inst.scenario.tau, inst.witness->parent());
  o.check(fix.contains(*inst.witness) && is_maximal_isotropic(*inst.witness), [&] {
    Json j = describe(inst);
    j["detail"] = "generated witness is not a fixed maximal isotropic subgroup mod " + std::to_string(n);
    return j;
  });
}

inline bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.hypothesis == b.hypothesis && a.conclusion == b.conclusion;
}

inline SuiteReport generated_suite(const std::string& suite, const std::string& gen_id, const SuiteOptions& opt,
                                   const std::function<Verdict(const InertiaGenerator&, const Scenario&)>& fn) {
  auto outcomes = run_indexed(opt.trials, opt.threads, [&](std::size_t i) {
    TrialOutcome o;
    const GeneratedInstance inst = generate_instance(gen_id, opt.dmax, opt.seed, i);
    check_witness(inst, o);
    const InertiaGenerator g = validate(inst.scenario);
    const Verdict v = fn(g, inst.scenario);
    o.check(v.hypothesis, [&] {
      Json j = describe(inst);
      j["detail"] = "generated instance does not meet the hypothesis: " + v.note;
      return j;
    });
    o.verdict(v, [&] { return describe(inst); });
    // Transport: the unconjugated base gives the same verdict.
    if (i % 8 == 0) {
      Scenario base = inst.scenario;
      base.tau = inst.base;
      const Verdict vb = fn(validate(base), base);
      o.check(same_verdict(v, vb), [&] {
        Json j = describe(inst);
        j["detail"] = "verdict changed under conjugation";
        return j;
      });
    }
    return o;
  });
  return aggregate(suite, "hypothesis-preserving", opt, std::move(outcomes));
}

inline SuiteReport suite_neron2(const SuiteOptions& opt) {
  return generated_suite("neron2", "neron2", opt,
                         [](const InertiaGenerator& g, const Scenario& s) { return neron2_verdict(g, s.pol()); });
}

inline SuiteReport suite_neron3(const SuiteOptions& opt) {
  return generated_suite("neron3", "neron3", opt,
                         [](const InertiaGenerator& g, const Scenario& s) { return neron3_verdict(g, s.pol()); });
}

inline SuiteReport suite_neron4a(const SuiteOptions& opt) {
  return generated_suite("neron4a", "neron4a", opt, [](const InertiaGenerator& g, const Scenario&) {
    return neron4_verdict(g, Neron4Mode::TrivialMod2);
  });
}

inline SuiteReport suite_neron4b(const SuiteOptions& opt) {
  return generated_suite("neron4b", "neron4b", opt, [](const InertiaGenerator& g, const Scenario& s) {
    return neron4_verdict(g, Neron4Mode::Lagrangian4, s.pol());
  });
}

inline SuiteReport suite_pressred(const SuiteOptions& opt) {
  return generated_suite("pressred", "pressred", opt,
                         [](const InertiaGenerator& g, const Scenario& s) { return pressred_verdict(g, s.pol()); });
}

inline SuiteReport suite_randm(const SuiteOptions& opt) {
  return generated_suite("randm", "randm", opt,
                         [](const InertiaGenerator& g, const Scenario&) { return randm_verdict(g.tau, 2, 1, 2); });
}

inline SuiteReport suite_level_structure(const SuiteOptions& opt) {
  SuiteReport r = generated_suite("level-structure", "level-structure", opt,
                                  [](const InertiaGenerator& g, const Scenario& s) {
                                    const auto ls = level_structure_criterion(g, *s.n, s.pol());
                                    Verdict v = ls.converse;
                                    if (!ls.forward.agree) v = ls.forward;
                                    if (!ls.found) {
                                      v.agree = false;
                                      v.note = "no fixed maximal isotropic subgroup found for a semistable tau";
                                    }
                                    return v;
                                  });
  // Forward direction on the catalog: a fixed Lagrangian at n = 5 forces semistability.
  SuiteOptions cat_opt = opt;
  cat_opt.trials = 0;
  SuiteReport c = catalog_suite("level-structure", cat_opt, catalog(std::min<std::size_t>(opt.dmax, 2)),
                                [](const Sample& s, TrialOutcome& o) {
                                  const InertiaGenerator g = classify(s.tau, 0);
                                  const auto ls = level_structure_criterion(g, 5, Polarization::principal(g.d));
                                  o.verdict(ls.forward, [&] { return describe(s); });
                                  o.verdict(ls.converse, [&] { return describe(s); });
                                });
  r.instances += c.instances;
  r.checked += c.checked;
  r.hypothesis_met += c.hypothesis_met;
  r.violations += c.violations;
  for (auto& f : c.counterexamples) r.counterexamples.push_back(std::move(f));
  // Degree obstruction: Lambda = 5 I at n = 5 must be refused.
  try {
    fixed_lagrangian_from_semistable(classify(IntMatrix::identity(2), 0), 5,
                                     Polarization{Integer(5) * IntMatrix::identity(2)});
    ++r.violations;
    r.counterexamples.push_back(Json{{"detail", "degree obstruction not raised"}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegreeObstruction) {
      ++r.violations;
      r.counterexamples.push_back(Json{{"detail", e.what()}});
    }
  }
  ++r.checked;
  return r;
}

inline SuiteReport suite_kernel_count(const SuiteOptions& opt) {
  const auto cat = catalog(std::min<std::size_t>(opt.dmax, 2), true);
  auto outcomes = run_indexed(cat.size(), opt.threads, [&](std::size_t i) {
    TrialOutcome o;
    const InertiaGenerator g = classify(cat[i].tau, 0);
    for (std::uint64_t n = 2; n <= 9; ++n) {
      const NeronTorsion t = neron_torsion(g, n);
      o.verdict(make_verdict("kernel-count-n" + std::to_string(n), true, t.identity_holds,
                             "#ker((tau-1) mod n) = n^(2a) #Phi[n]"),
                [&] {
                  Json j{{"label", cat[i].name}, {"tau", to_json(cat[i].tau)}, {"n", n}};
                  return j;
                });
    }
    o.verdict(component_rank_bound(g), [&] { return Json{{"label", cat[i].name}, {"tau", to_json(cat[i].tau)}}; });
    return o;
  });
  return aggregate("kernel-count-identity", "exhaustive", opt, std::move(outcomes));
}

/// The three worked cohomology examples, reproduced exactly.
inline TrialOutcome cohomology_examples() {
  TrialOutcome o;
  const IntMatrix minus = -IntMatrix::identity(4);
  const InertiaGenerator g1 = classify(minus, 3);
  const auto c1 = highercohcor_classify(g1, 2, 5);
  o.check(c1.condition_a && c1.condition_c && c1.equivalence.agree,
          [] { return Json{{"detail", "-I, d = 2, k = 2, n = 5, p = 3 should give a = c = true"}}; });
  const InertiaGenerator g2 = classify(block_sum({blocks::order4(), blocks::order4()}), 3);
  const auto c2 = highercohcor_classify(g2, 2, 5);
  o.check(!c2.condition_a && !c2.condition_c,
          [] { return Json{{"detail", "r4 + r4, k = 2, n = 5, p = 3 should give a = c = false"}}; });
  const InertiaGenerator g3 = classify(block_sum({blocks::unipotent(1), blocks::identity()}), 0);
  const auto c3 = highercohcor_classify(g3, 3, 7);
  o.check(c3.condition_a && c3.condition_c,
          [] { return Json{{"detail", "U1 + I, k = 3, n = 7 should give a = c = true"}}; });
  o.check(hk_vanishing(g1, 2, 7) && !hk_vanishing(classify(minus, 0), 1, 3),
          [] { return Json{{"detail", "-I vanishing examples"}}; });
  return o;
}

inline SuiteReport suite_cohomology(const SuiteOptions& opt) {
  const auto cat = filtered(2, false, 2);
  auto outcomes = run_indexed(cat.size() + opt.trials + 1, opt.threads, [&](std::size_t i) {
    if (i == cat.size() + opt.trials) return cohomology_examples();
    TrialOutcome o;
    const Sample s = catalog_or_conjugate(cat, opt.seed, i);
    const InertiaGenerator g = classify(s.tau, 0);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::uint64_t n : {5, 7, 8, 9}) {
        if (n_set(static_cast<unsigned>(k + 1)).contains(n)) continue;
        const auto c = highercohcor_classify(g, k, n);
        auto ctx = [&] {
          Json j = describe(s);
          j["k"] = k;
          j["n"] = n;
          return j;
        };
        o.verdict(c.equivalence, ctx);
        if (c.simplified) o.verdict(*c.simplified, ctx);
      }
    }
    // Vanishing for semistable tau at every k and n <= 30; the quadratic
    // purely additive case at even k.
    if (i < cat.size()) {
      for (std::size_t k = 1; k < 2 * g.d; ++k) {
        for (std::uint64_t n = 2; n <= 30; ++n) {
          o.verdict(hk_vanishing_verdict(g, k, n), [&] {
            Json j = describe(s);
            j["k"] = k;
            j["n"] = n;
            return j;
          });
        }
        o.verdict(hk_vanishing_verdict(g, k, 0), [&] { return describe(s); });
      }
      // Functoriality: action of tau^e is the e-th power of the action.
      for (std::size_t k = 1; k < 2 * g.d; ++k) {
        const IntMatrix a = cohomology_action(g.tau, k, 0).integral;
        const IntMatrix a3 = cohomology_action(g.tau.pow(3), k, 0).integral;
        o.check(a3 == a.pow(3), [&] {
          Json j = describe(s);
          j["detail"] = "cohomology action not functorial";
          return j;
        });
      }
    }
    return o;
  });
  SuiteReport r = aggregate("cohomology-equivalence", "catalog+conjugates", opt, std::move(outcomes));
  r.notes.push_back("d = 2 catalog, k in {1,2,3}, n in {5,7,8,9} outside N(k+1)");
  return r;
}

inline SuiteReport suite_raynaud(const SuiteOptions& opt) {
  SuiteReport r = catalog_suite("raynaud", opt, catalog(std::min<std::size_t>(opt.dmax, 2)),
                                [](const Sample& s, TrialOutcome& o) {
                                  const InertiaGenerator g = classify(s.tau, 0);
                                  for (std::uint64_t m = 3; m <= 9; ++m) {
                                    o.verdict(raynaud_criterion(g, m), [&] {
                                      Json j = describe(s);
                                      j["m"] = m;
                                      return j;
                                    });
                                  }
                                });
  const InertiaGenerator minus = classify(-IntMatrix::identity(2), 0);
  const Verdict sharp = raynaud_criterion(minus, 2);
  ++r.checked;
  if (sharp.hypothesis || galois_criterion(minus)) {
    ++r.violations;
    r.counterexamples.push_back(Json{{"detail", "-I at m = 2 should be the recorded sharpness example"}});
  }
  r.notes.push_back("sharpness at m = 2: tau = -I is trivial mod 2 yet not semistable");
  return r;
}

inline SuiteReport suite_elliptic(const SuiteOptions& opt) {
  return catalog_suite("elliptic", opt, catalog(1), [](const Sample& s, TrialOutcome& o) {
    for (std::uint64_t p : {0, 2, 3, 5}) {
      InertiaGenerator g;
      try {
        g = classify(s.tau, p);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::WildRamification) continue;
        throw;
      }
      for (const auto& v : elliptic_criteria(g)) o.verdict(v, [&] { return describe(s, p); });
    }
  });
}

inline SuiteReport suite_paddcor(const SuiteOptions& opt) {
  std::vector<CatalogEntry> cat;
  for (auto& e : catalog(std::min<std::size_t>(opt.dmax, 2), true)) {
    if (classify(e.tau, 0).purely_additive()) cat.push_back(std::move(e));
  }
  return catalog_suite("paddcor", opt, cat, [](const Sample& s, TrialOutcome& o) {
    const InertiaGenerator g = classify(s.tau, 0);
    for (const auto& v : paddcor_criteria(g)) o.verdict(v, [&] { return describe(s); });
  });
}

inline SuiteReport suite_exceptional(const SuiteOptions& opt) {
  SuiteReport r = catalog_suite("exceptional", opt, catalog(std::min<std::size_t>(opt.dmax, 2)),
                       [](const Sample& s, TrialOutcome& o) {
                         const InertiaGenerator g = classify(s.tau, 0);
                         for (std::uint64_t n : {2, 3, 4}) {
                           o.verdict(exceptional_criterion(g, n).verdict, [&] {
                             Json j = describe(s);
                             j["n"] = n;
                             return j;
                           });
                         }
                       });
  r.notes.push_back(kRCaveat);
  return r;
}

inline SuiteReport suite_fixed_perp(const SuiteOptions& opt) {
  return catalog_suite("fixed-perp", opt, catalog(std::min<std::size_t>(opt.dmax, 2)),
                       [](const Sample& s, TrialOutcome& o) {
                         const InertiaGenerator g = classify(s.tau, 0);
                         for (std::uint64_t n = 2; n <= 9; ++n) {
                           o.verdict(thm_fixed_perp(g, n), [&] {
                             Json j = describe(s);
                             j["n"] = n;
                             return j;
                           });
                         }
                         o.verdict(thm_galois_consistency(g), [&] { return describe(s); });
                         o.verdict(thm_eigenvalue_degree(g, g.semisimple_order), [&] { return describe(s); });
                       });
}

/// Conjugation-invariant data of tau: everything the criteria read.
inline Json fingerprint(const InertiaGenerator& g) {
  Json j;
  j["semistable"] = galois_criterion(g);
  j["m"] = g.semisimple_order;
  j["charpoly"] = char_poly(g.tau).to_string();
  if (g.potentially_good()) {
    const NeronInvariants inv = neron_invariants(g);
    j["a"] = inv.a;
    j["phi"] = to_json(inv.phi);
  }
  for (std::uint64_t n = 2; n <= 5; ++n) {
    const Subgroup fix = fixed_subgroup(g.tau, static_cast<Residue>(n));
    j["fix" + std::to_string(n)] = to_json(abelian_invariants(fix));
    j["witness" + std::to_string(n)] = find_witness_subgroup(g, n).has_value();
  }
  j["lagrangian2"] = find_fixed_lagrangian(g, TorsionModule(2, g.d)).has_value();
  for (std::size_t k = 1; k < 2 * g.d; ++k) j["hk" + std::to_string(k)] = hk_vanishing(g, k, 5);
  return j;
}

inline SuiteReport suite_conjugation(const SuiteOptions& opt) {
  const auto cat = catalog(std::min<std::size_t>(opt.dmax, 2));
  auto outcomes = run_indexed(opt.trials, opt.threads, [&](std::size_t i) {
    TrialOutcome o;
    const Sample s = catalog_or_conjugate(cat, opt.seed, cat.size() + i);
    const Json a = fingerprint(classify(s.base, 0));
    const Json b = fingerprint(classify(s.tau, 0));
    o.check(a == b, [&] {
      Json j = describe(s);
      j["base"] = a;
      j["conjugate"] = b;
      return j;
    });
    return o;
  });
  return aggregate("conjugation-invariance", "conjugates", opt, std::move(outcomes));
}

/// Free sampling: random block sums, random tame p, full analysis. A
/// disagreeing verdict is a model-mismatch finding.
inline SuiteReport suite_free(const SuiteOptions& opt) {
  const auto prim = catalog(1);
  auto outcomes = run_indexed(opt.trials, opt.threads, [&](std::size_t i) {
    TrialOutcome o;
    Rng rng(trial_seed(opt.seed, i));
    const std::size_t d = 1 + rng.below(std::min<std::size_t>(opt.dmax, 2));
    std::vector<IntMatrix> parts;
    for (std::size_t b = 0; b < d; ++b) parts.push_back(prim[rng.below(prim.size())].tau);
    const IntMatrix base = block_sum(parts);
    Scenario s;
    s.d = d;
    s.tau = random_symplectic_conjugate(base, rng.next()).tau;
    s.seed = trial_seed(opt.seed, i);
    const std::uint64_t primes[] = {0, 2, 3, 5, 7};
    s.p = primes[rng.below(5)];
    if (std::gcd(s.p, classify(s.tau, 0).semisimple_order) != 1 && s.p != 0) s.p = 0;
    const AnalysisReport rep = analyze(s);
    for (const auto& v : rep.verdicts) o.verdict(v, [&] { return to_json(s); });
    return o;
  });
  SuiteReport r = aggregate("free-sample", "free", opt, std::move(outcomes));
  r.notes.push_back("free sampling: disagreements are model-mismatch findings, expected 0");
  return r;
}

// --- Linear algebra properties -------------------------------------------

inline IntMatrix random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(-bound, bound);
  }
  return m;
}

inline ModMatrix random_mod_matrix(Rng& rng, Residue n, std::size_t r, std::size_t c) {
  ModMatrix m(n, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<Residue>(rng.below(static_cast<std::uint64_t>(n))));
  }
  return m;
}

/// Row span as a set, by enumerating every coefficient vector.
inline std::set<std::vector<Residue>> brute_span(const ModMatrix& m) {
  const Residue n = m.modulus();
  std::set<std::vector<Residue>> out;
  std::vector<Residue> coef(m.rows(), 0);
  for (;;) {
    std::vector<Residue> v(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + coef[i] * m(i, j)) % n;
    }
    out.insert(std::move(v));
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == n) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return out;
}

/// gcd of all k x k minors.
inline Integer determinant_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  IntMatrix minor(k, k);
  for (const auto& rs : k_subsets(a.rows(), k)) {
    for (const auto& cs : k_subsets(a.cols(), k)) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rs[i], cs[j]);
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), determinant(minor).get_mpz_t());
    }
  }
  return g;
}

inline TrialOutcome linalg_trial(std::uint64_t seed, std::size_t i) {
  TrialOutcome o;
  Rng rng(trial_seed(seed, i));
  // Smith normal form: reconstruction, unimodularity, divisibility, minors.
  {
    const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    const IntMatrix a = random_int_matrix(rng, r, c, 5);
    const SmithDecomposition s = smith_normal_form(a);
    bool ok = s.U * a * s.V == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    for (std::size_t k = 0; ok && k < s.divisors.size(); ++k) {
      ok = s.divisors[k] >= 0;
      if (k + 1 < s.divisors.size() && s.divisors[k] != 0) {
        ok = ok && mpz_divisible_p(s.divisors[k + 1].get_mpz_t(), s.divisors[k].get_mpz_t());
      }
      if (k > 0 && s.divisors[k - 1] == 0) ok = ok && s.divisors[k] == 0;
    }
    if (ok && std::min(r, c) <= 4) {
      Integer prod = 1;
      for (std::size_t k = 0; k < s.divisors.size(); ++k) {
        prod *= s.divisors[k];
        ok = ok && prod == determinant_divisor(a, k + 1);
      }
    }
    o.check(ok, [&] { return Json{{"property", "smith"}, {"A", to_json(a)}}; });
  }
  // Howell form: idempotent, span preserving, canonical.
  {
    const Residue n = 2 + static_cast<Residue>(rng.below(3));
    const std::size_t c = 1 + rng.below(4);
    const std::size_t r = 1 + rng.below(3);
    const ModMatrix a = random_mod_matrix(rng, n, r, c);
    const ModMatrix h = howell_form(a);
    bool ok = howell_form(h) == h && brute_span(h.rows() ? h : ModMatrix(n, 1, c)) == brute_span(a);
    // Same span through a random invertible recombination: same form.
    ModMatrix mix = random_mod_matrix(rng, n, r, r);
    for (std::size_t k = 0; k < r; ++k) mix.set(k, k, 1);
    for (std::size_t x = 0; x < r; ++x) {
      for (std::size_t y = 0; y < x; ++y) mix.set(x, y, 0);
    }
    ok = ok && howell_form(mix * a) == h;
    const ModMatrix b = random_mod_matrix(rng, n, 1 + rng.below(3), c);
    ok = ok && ((brute_span(a) == brute_span(b)) == (howell_form(b) == h));
    o.check(ok, [&] { return Json{{"property", "howell"}, {"A", to_json(a)}, {"n", n}}; });
  }
  // Exterior powers: multiplicativity and identity.
  {
    const IntMatrix a = random_int_matrix(rng, 4, 4, 3), b = random_int_matrix(rng, 4, 4, 3);
    const std::size_t k = 1 + rng.below(4);
    const bool ok = exterior_power(a * b, k) == exterior_power(a, k) * exterior_power(b, k) &&
                    exterior_power(IntMatrix::identity(4), k).is_identity();
    o.check(ok, [&] { return Json{{"property", "exterior"}, {"A", to_json(a)}, {"B", to_json(b)}, {"k", k}}; });
  }
  // Reduction mod n is a ring homomorphism; char poly is conjugation invariant.
  {
    const IntMatrix a = random_int_matrix(rng, 3, 3, 9), b = random_int_matrix(rng, 3, 3, 9);
    const Residue n = 2 + static_cast<Residue>(rng.below(30));
    bool ok = ModMatrix(a + b, n) == ModMatrix(a, n) + ModMatrix(b, n) &&
              ModMatrix(a * b, n) == ModMatrix(a, n) * ModMatrix(b, n);
    const IntMatrix u = random_symplectic(2, rng);
    const IntMatrix m = random_int_matrix(rng, 4, 4, 4);
    ok = ok && char_poly(u * m * symplectic_inverse(u)) == char_poly(m);
    o.check(ok, [&] { return Json{{"property", "reduction"}, {"A", to_json(a)}, {"B", to_json(b)}}; });
  }
  return o;
}

inline SuiteReport suite_linalg(const SuiteOptions& opt) {
  auto outcomes = run_indexed(opt.trials, opt.threads, [&](std::size_t i) { return linalg_trial(opt.seed, i); });
  return aggregate("linalg-properties", "random", opt, std::move(outcomes));
}

}  // namespace detail

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

inline const std::map<std::string, SuiteFn>& suite_registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"square-mod-n-equivalence", detail::suite_square_mod_n},
      {"witness-equivalence", detail::suite_witness},
      {"quasithm-sweep", detail::suite_quasithm},
      {"neron2", detail::suite_neron2},
      {"neron3", detail::suite_neron3},
      {"neron4a", detail::suite_neron4a},
      {"neron4b", detail::suite_neron4b},
      {"pressred", detail::suite_pressred},
      {"randm", detail::suite_randm},
      {"level-structure", detail::suite_level_structure},
      {"kernel-count-identity", detail::suite_kernel_count},
      {"cohomology-equivalence", detail::suite_cohomology},
      {"raynaud", detail::suite_raynaud},
      {"elliptic", detail::suite_elliptic},
      {"paddcor", detail::suite_paddcor},
      {"exceptional", detail::suite_exceptional},
      {"fixed-perp", detail::suite_fixed_perp},
      {"conjugation-invariance", detail::suite_conjugation},
      {"free-sample", detail::suite_free},
      {"linalg-properties", detail::suite_linalg},
  };
  return reg;
}

inline SuiteReport run_suite(const std::string& id, const SuiteOptions& opt) {
  const auto& reg = suite_registry();
  const auto it = reg.find(id);
  if (it == reg.end()) throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + id + "\"");
  if (opt.dmax < 1) throw Error(ErrorKind::InvalidArgument, "dmax must be at least 1");
  return it->second(opt);
}

}  // namespace tamelab
