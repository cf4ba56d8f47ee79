#include <gtest/gtest.h>

#include "tamelab/catalog.hpp"
#include "tamelab/random.hpp"
#include "tamelab/torsion.hpp"

using namespace tamelab;

namespace {

using Rows = std::vector<std::vector<Residue>>;

Subgroup span(const TorsionModule& t, const Rows& rows) { return Subgroup(t, rows); }

std::size_t brute_fixed_count(const IntMatrix& tau, Residue n) {
  const TorsionModule t(n, tau.rows() / 2);
  const ModMatrix m(tau, n);
  std::size_t count = 0;
  for (const auto& x : Subgroup::whole(t).elements()) {
    bool fixed = true;
    for (std::size_t i = 0; i < x.size() && fixed; ++i) {
      Residue s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s = (s + m(i, j) * x[j]) % n;
      fixed = s == x[i];
    }
    count += fixed;
  }
  return count;
}

}  // namespace

TEST(Complement, TrivialAndWhole) {
  const TorsionModule t(5, 1);
  EXPECT_EQ(orthogonal_complement(Subgroup::whole(t)), Subgroup::trivial(t));
  EXPECT_EQ(orthogonal_complement(Subgroup::trivial(t)), Subgroup::whole(t));
}

TEST(Complement, LineModThree) {
  const TorsionModule t(3, 1);
  const Subgroup s = span(t, {{1, 0}});
  EXPECT_EQ(orthogonal_complement(s), s);
}

TEST(Complement, OrderProductAndDoubleComplement) {
  for (Residue n : {2, 3, 4}) {
    for (std::size_t d : {1u, 2u}) {
      if (n == 4 && d == 2) continue;
      const TorsionModule t(n, d);
      for (const auto& s : enumerate_subgroups(t)) {
        const Subgroup perp = orthogonal_complement(s);
        EXPECT_EQ(s.order() * perp.order(), t.order());
        EXPECT_EQ(orthogonal_complement(perp), s);
      }
    }
  }
}

TEST(Complement, SampledAtLevelFour) {
  const TorsionModule t(4, 2);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Rows rows(1 + rng.below(3), std::vector<Residue>(4));
    for (auto& r : rows) {
      for (auto& x : r) x = static_cast<Residue>(rng.below(4));
    }
    const Subgroup s(t, rows);
    EXPECT_EQ(s.order() * orthogonal_complement(s).order(), t.order());
    EXPECT_EQ(orthogonal_complement(orthogonal_complement(s)), s);
  }
}

TEST(InducedPairing, Examples) {
  const TorsionModule t2(2, 1);
  const TorsionModule a = induced_pairing(t2, Polarization::principal(1));
  EXPECT_EQ(a.gram(), ModMatrix(standard_symplectic(1), 2));
  const TorsionModule b = induced_pairing(t2, Polarization{Integer(3) * IntMatrix::identity(2)});
  EXPECT_EQ(b.gram(), ModMatrix(standard_symplectic(1), 2));
  EXPECT_TRUE(b.nondegenerate());
  const TorsionModule c = induced_pairing(TorsionModule(4, 1), Polarization{Integer(2) * IntMatrix::identity(2)});
  EXPECT_FALSE(c.nondegenerate());
  EXPECT_EQ(Polarization{Integer(3) * IntMatrix::identity(2)}.degree(), 9);
}

TEST(Isotropic, Examples) {
  const TorsionModule t4(4, 1);
  EXPECT_TRUE(is_maximal_isotropic(span(t4, {{1, 0}})));
  EXPECT_TRUE(is_maximal_isotropic(span(t4, {{2, 0}, {0, 2}})));
  const TorsionModule t2(2, 1);
  EXPECT_TRUE(is_maximal_isotropic(span(t2, {{1, 1}})));
  EXPECT_FALSE(is_isotropic(Subgroup::whole(t2)));
  const TorsionModule deg = induced_pairing(t4, Polarization{Integer(2) * IntMatrix::identity(2)});
  EXPECT_THROW((void)is_maximal_isotropic(Subgroup::whole(deg)), Error);
}

TEST(FixedSubgroup, Examples) {
  const IntMatrix minus = -IntMatrix::identity(2);
  EXPECT_EQ(fixed_subgroup(minus, 2).order(), 4);
  const TorsionModule t4(4, 1);
  EXPECT_EQ(fixed_subgroup(minus, 4), span(t4, {{2, 0}, {0, 2}}));
  EXPECT_EQ(abelian_invariants(fixed_subgroup(minus, 4)), (std::vector<Integer>{2, 2}));
  const TorsionModule t3(3, 1);
  EXPECT_EQ(fixed_subgroup(blocks::order3(), 3), span(t3, {{2, 1}}));
}

TEST(FixedSubgroup, MatchesBruteForce) {
  for (const auto& e : catalog(2)) {
    for (Residue n = 2; n <= 5; ++n) {
      if (e.tau.rows() == 4 && n > 3) continue;
      EXPECT_EQ(fixed_subgroup(e.tau, n).order(), brute_fixed_count(e.tau, n)) << e.name << " n=" << n;
    }
  }
}

TEST(DualAction, Examples) {
  EXPECT_EQ(dual_action(ModMatrix(-IntMatrix::identity(2), 7)), ModMatrix(-IntMatrix::identity(2), 7));
  EXPECT_EQ(dual_action(ModMatrix(blocks::unipotent(1), 5)), ModMatrix(IntMatrix{{1, 0}, {4, 1}}, 5));
  const IntMatrix j = standard_symplectic(1);
  for (const auto& e : catalog(1)) {
    const ModMatrix a(e.tau, 7);
    EXPECT_EQ(dual_action(a), ModMatrix(j, 7) * a * inverse(ModMatrix(j, 7))) << e.name;
    EXPECT_EQ(dual_action(dual_action(a)), a);
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_subgroups(TorsionModule(2, 1)).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(TorsionModule(3, 1)).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(TorsionModule(4, 1)).size(), 15u);
  EXPECT_EQ(enumerate_subgroups(TorsionModule(2, 2)).size(), 67u);
  EXPECT_EQ(count_subgroups({4, 4}), 15);
  EXPECT_EQ(count_subgroups({5, 5, 5, 5}), 1120);
}

TEST(Enumerate, SortedAndDistinct) {
  const auto subs = enumerate_subgroups(TorsionModule(4, 1));
  for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(subs[i - 1] < subs[i]);
}

TEST(Enumerate, CapIsEnforced) {
  try {
    enumerate_subgroups(TorsionModule(5, 2), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationCap);
  }
}

TEST(Enumerate, IntervalMatchesFilter) {
  const TorsionModule t(4, 1);
  const Subgroup lower = span(t, {{2, 0}});
  const Subgroup upper = span(t, {{1, 0}, {0, 2}});
  std::vector<Subgroup> expected;
  for (const auto& s : enumerate_subgroups(t)) {
    if (s.contains(lower) && upper.contains(s)) expected.push_back(s);
  }
  EXPECT_EQ(enumerate_subgroups_between(lower, upper), expected);
  EXPECT_TRUE(enumerate_subgroups_between(upper, lower).empty());
}

TEST(Extend, Examples) {
  const TorsionModule t3(3, 1);
  EXPECT_EQ(extend_to_maximal_isotropic(Subgroup::whole(t3)), span(t3, {{1, 0}}));
  const TorsionModule t4(4, 1);
  const Subgroup lag = span(t4, {{2, 0}, {0, 2}});
  EXPECT_EQ(extend_to_maximal_isotropic(lag), lag);
  const TorsionModule t2(2, 1);
  const Subgroup fix = fixed_subgroup(blocks::order4(), t2);
  EXPECT_EQ(fix, span(t2, {{1, 1}}));
  EXPECT_EQ(extend_to_maximal_isotropic(fix), fix);
}

TEST(Extend, AlwaysLagrangian) {
  for (Residue n : {2, 3, 4}) {
    const TorsionModule t(n, 1);
    for (const auto& s : enumerate_subgroups(t)) {
      if (!s.contains(orthogonal_complement(s))) continue;
      const Subgroup h = extend_to_maximal_isotropic(s);
      EXPECT_TRUE(is_maximal_isotropic(h));
      EXPECT_TRUE(s.contains(h));
    }
  }
  const TorsionModule t(2, 2);
  for (const auto& s : enumerate_subgroups(t)) {
    if (!s.contains(orthogonal_complement(s))) continue;
    EXPECT_TRUE(is_maximal_isotropic(extend_to_maximal_isotropic(s)));
  }
}

TEST(Subgroup, ImageTransportsFixedPoints) {
  Rng rng(21);
  for (const auto& e : catalog(1)) {
    const IntMatrix u = random_symplectic(1, rng);
    const IntMatrix conj = u * e.tau * symplectic_inverse(u);
    const Subgroup fix = fixed_subgroup(e.tau, 6);
    EXPECT_EQ(fix.image(ModMatrix(u, 6)), fixed_subgroup(conj, 6)) << e.name;
  }
}

TEST(Subgroup, RejectsForeignGenerators) {
  EXPECT_THROW(Subgroup(TorsionModule(4, 1), ModMatrix(5, 1, 2)), Error);
}
