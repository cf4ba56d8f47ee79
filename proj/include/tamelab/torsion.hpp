#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tamelab/cyclotomic.hpp"
#include "tamelab/howell.hpp"
#include "tamelab/linalg.hpp"
#include "tamelab/smith.hpp"

namespace tamelab {

/// (Z/nZ)^(2d) with an alternating Gram matrix G: <x, y> = x^T G y.
class TorsionModule {
 public:
  /// Standard module: G = J.
  TorsionModule(Residue level, std::size_t dim) : TorsionModule(level, dim, ModMatrix(standard_symplectic(dim), level)) {}

  TorsionModule(Residue level, std::size_t dim, ModMatrix gram) : n_(level), d_(dim), gram_(std::move(gram)) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "level must be >= 1");
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
    if (gram_.modulus() != level || gram_.rows() != 2 * dim || gram_.cols() != 2 * dim) {
      throw Error(ErrorKind::InvalidArgument, "Gram matrix must be 2d x 2d modulo the level");
    }
    for (std::size_t i = 0; i < 2 * dim; ++i) {
      if (gram_(i, i) != 0) throw Error(ErrorKind::NotAlternating, "Gram matrix has a nonzero diagonal entry");
      for (std::size_t j = 0; j < 2 * dim; ++j) {
        if (mod_reduce(gram_(i, j) + gram_(j, i), level) != 0) {
          throw Error(ErrorKind::NotAlternating, "Gram matrix is not antisymmetric");
        }
      }
    }
    nondegenerate_ = is_unit(determinant(gram_), level);
  }

  [[nodiscard]] Residue level() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return d_; }
  [[nodiscard]] std::size_t rank() const noexcept { return 2 * d_; }
  [[nodiscard]] const ModMatrix& gram() const noexcept { return gram_; }
  [[nodiscard]] bool nondegenerate() const noexcept { return nondegenerate_; }

  /// n^(2d)
  [[nodiscard]] Integer order() const {
    Integer o;
    mpz_ui_pow_ui(o.get_mpz_t(), static_cast<unsigned long>(n_), 2 * d_);
    return o;
  }

  [[nodiscard]] Residue pair(const std::vector<Residue>& x, const std::vector<Residue>& y) const {
    __int128 acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      __int128 inner = 0;
      for (std::size_t j = 0; j < y.size(); ++j) inner += static_cast<__int128>(gram_(i, j)) * y[j];
      acc += static_cast<__int128>(x[i]) * (inner % n_);
    }
    return static_cast<Residue>(acc % n_);
  }

  friend bool operator==(const TorsionModule& a, const TorsionModule& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.gram_ == b.gram_;
  }

 private:
  Residue n_;
  std::size_t d_;
  ModMatrix gram_;
  bool nondegenerate_ = false;
};

/// Submodule of a TorsionModule held by its Howell-form generators.
class Subgroup {
 public:
  Subgroup(const TorsionModule& parent, const ModMatrix& generators)
      : parent_(parent) {
    if (generators.modulus() != parent.level() || generators.cols() != parent.rank()) {
      throw Error(ErrorKind::InvalidArgument, "generators do not live in the parent module");
    }
    gens_ = howell_form(generators);
    order_ = span_order(gens_);
  }

  Subgroup(const TorsionModule& parent, const std::vector<std::vector<Residue>>& rows)
      : Subgroup(parent, ModMatrix(parent.level(), parent.rank(), rows)) {}

  static Subgroup trivial(const TorsionModule& parent) {
    return {parent, ModMatrix(parent.level(), 0, parent.rank())};
  }
  static Subgroup whole(const TorsionModule& parent) {
    return {parent, ModMatrix::identity(parent.level(), parent.rank())};
  }

  [[nodiscard]] const TorsionModule& parent() const noexcept { return parent_; }
  [[nodiscard]] const ModMatrix& gens() const noexcept { return gens_; }
  [[nodiscard]] const Integer& order() const noexcept { return order_; }

  /// Every element, each exactly once, in lexicographic order.
  [[nodiscard]] std::vector<std::vector<Residue>> elements() const {
    const Residue n = parent_.level();
    std::vector<Residue> steps;
    for (std::size_t i = 0; i < gens_.rows(); ++i) {
      for (std::size_t j = 0; j < gens_.cols(); ++j) {
        if (gens_(i, j) != 0) {
          steps.push_back(n / gens_(i, j));
          break;
        }
      }
    }
    std::vector<std::vector<Residue>> out;
    std::vector<Residue> coef(gens_.rows(), 0);
    for (;;) {
      std::vector<Residue> v(parent_.rank(), 0);
      for (std::size_t i = 0; i < coef.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + coef[i] * gens_(i, j)) % n;
      }
      out.push_back(std::move(v));
      std::size_t i = 0;
      while (i < coef.size() && ++coef[i] == steps[i]) coef[i++] = 0;
      if (i == coef.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool contains(const std::vector<Residue>& v) const {
    return join(Subgroup(parent_, std::vector<std::vector<Residue>>{v})) == *this;
  }

  [[nodiscard]] bool contains(const Subgroup& other) const { return join(other) == *this; }

  /// S + T
  [[nodiscard]] Subgroup join(const Subgroup& other) const {
    auto rows = gens_.to_rows();
    auto more = other.gens_.to_rows();
    rows.insert(rows.end(), more.begin(), more.end());
    return {parent_, rows};
  }

  /// Image under a matrix acting on column vectors: g -> A g.
  [[nodiscard]] Subgroup image(const ModMatrix& a) const {
    if (gens_.rows() == 0) return *this;
    return {parent_, (a * gens_.transpose()).transpose()};
  }

  /// Canonical order: by subgroup order, then generator rows lexicographically.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.gens_.data() < b.gens_.data();
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.gens_ == b.gens_; }

  [[nodiscard]] std::string to_string() const { return gens_.to_string(); }

 private:
  TorsionModule parent_;
  ModMatrix gens_;
  Integer order_;
};

/// Integer matrix Lambda modeling a polarization; degree = |det Lambda|.
struct Polarization {
  IntMatrix matrix;

  [[nodiscard]] Integer degree() const { return abs(determinant(matrix)); }
  static Polarization principal(std::size_t d) { return {IntMatrix::identity(2 * d)}; }
};

// --- Operations -----------------------------------------------------------

/// S^perp = {y : <x, y> = 0 for every x in S}.
inline Subgroup orthogonal_complement(const Subgroup& s) {
  const TorsionModule& t = s.parent();
  if (s.gens().rows() == 0) return Subgroup::whole(t);
  return {t, kernel_mod_n(s.gens() * t.gram())};
}

/// Module with pairing <x, y>_Lambda = x^T (J Lambda) y.
inline TorsionModule induced_pairing(const TorsionModule& t, const Polarization& pol) {
  if (pol.matrix.rows() != t.rank() || pol.matrix.cols() != t.rank()) {
    throw Error(ErrorKind::InvalidArgument, "polarization size does not match module rank");
  }
  const ModMatrix gram = ModMatrix(standard_symplectic(t.dim()), t.level()) * ModMatrix(pol.matrix, t.level());
  return {t.level(), t.dim(), gram};
}

inline bool is_isotropic(const Subgroup& s) {
  const auto rows = s.gens().to_rows();
  for (const auto& x : rows) {
    for (const auto& y : rows) {
      if (s.parent().pair(x, y) != 0) return false;
    }
  }
  return true;
}

inline bool is_maximal_isotropic(const Subgroup& s) {
  if (!s.parent().nondegenerate()) {
    throw Error(ErrorKind::DegeneratePairing, "maximality needs a nondegenerate pairing");
  }
  return is_isotropic(s) && orthogonal_complement(s) == s;
}

/// Points fixed by tau modulo n: ker(tau - I).
inline Subgroup fixed_subgroup(const IntMatrix& tau, const TorsionModule& module) {
  const ModMatrix t(tau, module.level());
  return {module, kernel_mod_n(t - ModMatrix::identity(module.level(), tau.rows()))};
}

inline Subgroup fixed_subgroup(const IntMatrix& tau, Residue n) {
  if (!tau.is_square() || tau.rows() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "tau must be square of even size");
  }
  return fixed_subgroup(tau, TorsionModule(n, tau.rows() / 2));
}

/// Contragredient action (A^T)^(-1) mod n.
inline ModMatrix dual_action(const ModMatrix& a) { return inverse(a.transpose()); }

/// Abelian-group invariant factors (> 1, ascending, each dividing the next)
/// of a subgroup of (Z/nZ)^c. Uses S = (L + nZ^c)/nZ^c with L the lifted
/// generator lattice: if L + nZ^c has elementary divisors e_i, then
/// S = sum Z/(n/e_i).
inline std::vector<Integer> abelian_invariants(const Subgroup& s) {
  const Residue n = s.parent().level();
  const std::size_t c = s.parent().rank();
  IntMatrix m(s.gens().rows() + c, c);
  for (std::size_t i = 0; i < s.gens().rows(); ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(s.gens()(i, j));
  }
  for (std::size_t j = 0; j < c; ++j) m(s.gens().rows() + j, j) = static_cast<long>(n);
  std::vector<Integer> out;
  for (const auto& e : elementary_divisors(m)) {
    const Integer q = Integer(static_cast<long>(n)) / e;
    if (q > 1) out.push_back(q);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// --- Subgroup counting ----------------------------------------------------

/// Gaussian binomial [n choose k]_p.
inline Integer gaussian_binomial(unsigned n, unsigned k, unsigned long p) {
  if (k > n) return 0;
  Integer num = 1, den = 1, pp;
  for (unsigned i = 0; i < k; ++i) {
    Integer a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), p, n - i);
    mpz_ui_pow_ui(b.get_mpz_t(), p, i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Number of subgroups of a finite abelian p-group given by its conjugate
/// partition lambda' (lambda'_i = number of cyclic factors of order >= p^i).
/// Sums the standard count of type-mu subgroups over all mu inside lambda.
inline Integer count_subgroups_p_group(unsigned long p, const std::vector<unsigned>& conj) {
  Integer total = 0;
  const std::size_t len = conj.size();
  std::vector<unsigned> mu(len, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == len) {
      Integer term = 1;
      for (std::size_t j = 0; j < len; ++j) {
        const unsigned next = j + 1 < len ? mu[j + 1] : 0;
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(next) * (conj[j] - mu[j]));
        term *= pw * gaussian_binomial(conj[j] - next, mu[j] - next, p);
      }
      total += term;
      return;
    }
    const unsigned hi = i == 0 ? conj[0] : std::min(conj[i], mu[i - 1]);
    for (unsigned v = 0; v <= hi; ++v) {
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

/// Exact subgroup count of an abelian group given by its invariant factors.
inline Integer count_subgroups(const std::vector<Integer>& invariants) {
  std::map<unsigned long, std::vector<unsigned>> exps;  // prime -> exponents of cyclic factors
  for (const auto& f : invariants) {
    for (auto [p, e] : factorize(f.get_ui())) exps[p].push_back(e);
  }
  Integer total = 1;
  for (auto& [p, es] : exps) {
    const unsigned top = *std::max_element(es.begin(), es.end());
    std::vector<unsigned> conj(top, 0);
    for (unsigned i = 0; i < top; ++i) {
      for (unsigned e : es) conj[i] += e > i ? 1 : 0;
    }
    total *= count_subgroups_p_group(p, conj);
  }
  return total;
}

inline constexpr std::uint64_t kDefaultSubgroupCap = 1'000'000;

/// All subgroups of `ambient`, duplicate-free, in canonical order. Refuses
/// (EnumerationCap) when the exact subgroup count exceeds the cap.
inline std::vector<Subgroup> enumerate_subgroups_of(const Subgroup& ambient,
                                                    std::uint64_t cap = kDefaultSubgroupCap) {
  const Integer estimate = count_subgroups(abelian_invariants(ambient));
  if (estimate > Integer(static_cast<unsigned long>(cap))) {
    throw Error(ErrorKind::EnumerationCap,
                "estimated " + estimate.get_str() + " subgroups exceeds cap " + std::to_string(cap));
  }
  const TorsionModule& t = ambient.parent();
  // Cyclic subgroups first; every subgroup is a join of cyclic ones.
  std::set<Subgroup> cyclic;
  for (const auto& v : ambient.elements()) cyclic.insert(Subgroup(t, std::vector<std::vector<Residue>>{v}));
  std::set<Subgroup> seen(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> frontier(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclic) {
        Subgroup j = s.join(c);
        if (j == s) continue;
        if (seen.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Subgroups S with lower <= S <= upper, in canonical order.
inline std::vector<Subgroup> enumerate_subgroups_between(const Subgroup& lower, const Subgroup& upper,
                                                         std::uint64_t cap = kDefaultSubgroupCap) {
  if (!upper.contains(lower)) return {};
  const Integer estimate = count_subgroups(abelian_invariants(upper));
  if (estimate > Integer(static_cast<unsigned long>(cap))) {
    throw Error(ErrorKind::EnumerationCap,
                "estimated " + estimate.get_str() + " subgroups exceeds cap " + std::to_string(cap));
  }
  const TorsionModule& t = upper.parent();
  std::set<Subgroup> steps;
  for (const auto& v : upper.elements()) {
    if (!lower.contains(v)) steps.insert(Subgroup(t, std::vector<std::vector<Residue>>{v}));
  }
  std::set<Subgroup> seen{lower};
  std::vector<Subgroup> frontier{lower};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (const auto& c : steps) {
        Subgroup j = s.join(c);
        if (j == s) continue;
        if (seen.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Subgroup> enumerate_subgroups(const TorsionModule& t, std::uint64_t cap = kDefaultSubgroupCap) {
  return enumerate_subgroups_of(Subgroup::whole(t), cap);
}

/// Greedy completion of an isotropic subgroup inside S to a maximal
/// isotropic one: start from S^perp and add elements of S (coordinates
/// compared last-to-first) that are orthogonal to everything so far.
/// Requires a nondegenerate pairing and S^perp contained in S.
inline Subgroup extend_to_maximal_isotropic(const Subgroup& s) {
  const TorsionModule& t = s.parent();
  if (!t.nondegenerate()) throw Error(ErrorKind::DegeneratePairing, "pairing must be nondegenerate");
  Subgroup h = orthogonal_complement(s);
  if (!s.contains(h)) throw Error(ErrorKind::HypothesisNotMet, "S^perp is not contained in S");
  auto elems = s.elements();
  std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(t.level()), t.dim());
  for (const auto& x : elems) {
    if (h.order() == target) break;
    bool orthogonal = true;
    for (const auto& g : h.gens().to_rows()) {
      if (t.pair(g, x) != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal && !h.contains(x)) h = h.join(Subgroup(t, std::vector<std::vector<Residue>>{x}));
  }
  return h;
}

}  // namespace tamelab
