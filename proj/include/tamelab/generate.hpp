#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamelab/analysis.hpp"
#include "tamelab/catalog.hpp"
#include "tamelab/random.hpp"

namespace tamelab {

/// A generated scenario with the data needed to check transport: the
/// unconjugated base, the conjugator, and the witness subgroup (if the
/// hypothesis asks for one) already moved by the conjugator.
struct GeneratedInstance {
  Scenario scenario;
  IntMatrix base;
  IntMatrix u;
  std::string label;
  std::optional<std::uint64_t> level;
  std::optional<Subgroup> witness;
};

namespace detail {

struct GeneratorSpec {
  std::vector<CatalogEntry> blocks;
  std::optional<std::uint64_t> level;            // level of the Lagrangian witness
  std::vector<std::uint64_t> primes;             // residue characteristics to draw from
  std::vector<long> scalars;                     // polarization Lambda = c I
  std::vector<std::uint64_t> alternative_levels;  // for level-structure instances
};

inline GeneratorSpec generator_spec(const std::string& id) {
  using namespace blocks;
  GeneratorSpec s;
  if (id == "neron2" || id == "randm") {
    s.blocks = {{"I", identity()}, {"-I", minus_identity()}, {"r4", order4()}, {"r4^-1", order4_inv()}};
    s.level = 2;
    s.primes = {0, 3, 5, 7};
    s.scalars = {1, 3};
  } else if (id == "neron3") {
    s.blocks = {{"I", identity()}, {"r3", order3()}, {"r3^-1", order3_inv()}};
    s.level = 3;
    s.primes = {0, 2, 5, 7};
    s.scalars = {1, 2};
  } else if (id == "neron4a") {
    s.blocks = {{"I", identity()}, {"-I", minus_identity()}};
    s.primes = {0, 3, 5};
    s.scalars = {1};
  } else if (id == "neron4b") {
    s.blocks = {{"I", identity()}, {"-I", minus_identity()}};
    s.level = 4;
    s.primes = {0, 3, 5};
    s.scalars = {1, 3};
  } else if (id == "pressred") {
    s.blocks = {{"I", identity()},   {"-I", minus_identity()}, {"r4", order4()},
                {"r4^-1", order4_inv()}, {"U1", unipotent(1)},   {"U2", unipotent(2)},
                {"-U1", neg_unipotent(1)}};
    s.level = 2;
    s.primes = {0, 3, 5};
    s.scalars = {1, 3};
  } else if (id == "level-structure") {
    s.blocks = {{"I", identity()}, {"U1", unipotent(1)}, {"U2", unipotent(2)}, {"U-1", unipotent(-1)},
                {"U5", unipotent(5)}};
    s.primes = {0, 2, 3};
    s.scalars = {1, 2, 3};
    s.alternative_levels = {5, 7};
  } else {
    throw Error(ErrorKind::UnknownSuite, "no hypothesis generator for \"" + id + "\"");
  }
  return s;
}

/// Fixed Lagrangian of one 2x2 block at level n for the pairing c J.
inline std::vector<std::vector<Residue>> block_lagrangian(const IntMatrix& block, std::uint64_t n, long c) {
  const TorsionModule mod(static_cast<Residue>(n), 1,
                          static_cast<Residue>(c) * ModMatrix(standard_symplectic(1), static_cast<Residue>(n)));
  const InertiaGenerator g = classify(block, 0);
  const auto l = find_fixed_lagrangian(g, mod);
  if (!l) throw Error(ErrorKind::HypothesisNotMet, "catalog block " + block.to_string() + " fixes no Lagrangian");
  return l->gens().to_rows();
}

}  // namespace detail

/// Instances satisfying a theorem's hypotheses by construction: a block
/// sum of primitives each fixing a Lagrangian at the required level,
/// conjugated by a random symplectic matrix. Deterministic in
/// (id, count, dmax, seed); instance i depends only on (seed, i).
inline GeneratedInstance generate_instance(const std::string& id, std::size_t dmax, std::uint64_t seed,
                                           std::uint64_t index) {
  const detail::GeneratorSpec spec = detail::generator_spec(id);
  Rng rng(trial_seed(seed, index));
  const std::size_t d = 1 + rng.below(dmax);
  std::vector<IntMatrix> parts;
  std::string label;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& b = spec.blocks[rng.below(spec.blocks.size())];
    parts.push_back(b.tau);
    label += (i ? "+" : "") + b.name;
  }
  GeneratedInstance inst;
  inst.base = block_sum(parts);
  inst.label = label;
  const std::uint64_t p = spec.primes[rng.below(spec.primes.size())];
  const long c = spec.scalars[rng.below(spec.scalars.size())];
  std::optional<std::uint64_t> level = spec.level;
  if (!spec.alternative_levels.empty()) {
    level = spec.alternative_levels[rng.below(spec.alternative_levels.size())];
  }
  const Conjugated conj = random_symplectic_conjugate(inst.base, rng.next());
  inst.u = conj.u;
  inst.scenario.d = d;
  inst.scenario.p = (level && p != 0 && *level % p == 0) ? 0 : p;
  inst.scenario.tau = conj.tau;
  inst.scenario.seed = trial_seed(seed, index);
  inst.level = level;
  if (c != 1) inst.scenario.polarization = Integer(c) * IntMatrix::identity(2 * d);
  if (level && c % static_cast<long>(*level) == 0) inst.scenario.polarization.reset();
  inst.scenario.n = level;

  if (spec.level) {
    const Residue n = static_cast<Residue>(*spec.level);
    const long cc = inst.scenario.polarization ? c : 1;
    std::vector<std::vector<Residue>> rows;
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& r : detail::block_lagrangian(parts[i], *spec.level, cc)) {
        std::vector<Residue> v(2 * d, 0);
        v[i] = r[0];
        v[d + i] = r[1];
        rows.push_back(v);
      }
    }
    const TorsionModule mod = induced_pairing(TorsionModule(n, d), inst.scenario.pol());
    inst.witness = Subgroup(mod, rows).image(ModMatrix(inst.u, n));
  }
  return inst;
}

inline std::vector<GeneratedInstance> generate_hypothesis_instances(const std::string& id, std::size_t count,
                                                                    std::size_t dmax, std::uint64_t seed) {
  std::vector<GeneratedInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_instance(id, dmax, seed, i));
  return out;
}

}  // namespace tamelab
