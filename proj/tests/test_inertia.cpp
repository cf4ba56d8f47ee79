#include <gtest/gtest.h>

#include "tamelab/catalog.hpp"
#include "tamelab/inertia.hpp"
#include "tamelab/random.hpp"

using namespace tamelab;

namespace {

const IntMatrix kMinus = -IntMatrix::identity(2);
const IntMatrix kUnip{{1, 1}, {0, 1}};

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

Subgroup span(Residue n, const std::vector<std::vector<Residue>>& rows) { return Subgroup(TorsionModule(n, 1), rows); }

}  // namespace

TEST(Classify, Examples) {
  const auto g = classify(kMinus, 3);
  EXPECT_EQ(g.semisimple_order, 2u);
  EXPECT_TRUE(g.potentially_good());
  const auto u = classify(kUnip, 0);
  EXPECT_EQ(u.semisimple_order, 1u);
  EXPECT_FALSE(u.potentially_good());
  EXPECT_TRUE(galois_criterion(u));
  EXPECT_EQ(kind_of([] { classify(IntMatrix{{2, 0}, {0, 2}}, 0); }), ErrorKind::NotSymplectic);
}

TEST(Classify, Errors) {
  EXPECT_EQ(kind_of([] { classify(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { classify(IntMatrix{{2, 1}, {1, 1}}, 0); }), ErrorKind::NotQuasiUnipotent);
  EXPECT_EQ(kind_of([] { classify(blocks::order3(), 3); }), ErrorKind::WildRamification);
  EXPECT_EQ(kind_of([] { classify(blocks::neg_unipotent(1), 2); }), ErrorKind::WildRamification);
  EXPECT_NO_THROW(classify(blocks::neg_unipotent(1), 3));
}

TEST(Classify, WholeCatalogIsValid) {
  for (const auto& e : catalog(2)) EXPECT_NO_THROW(classify(e.tau, 0)) << e.name;
}

TEST(Galois, Examples) {
  EXPECT_TRUE(galois_criterion(classify(IntMatrix::identity(2))));
  EXPECT_TRUE(galois_criterion(classify(kUnip)));
  EXPECT_FALSE(galois_criterion(classify(kMinus)));
}

TEST(Galois, ConsistentOnCatalog) {
  for (const auto& e : catalog(2)) {
    const auto g = classify(e.tau);
    EXPECT_EQ(galois_criterion(g), is_unipotent(g.tau).unipotent) << e.name;
    EXPECT_EQ(galois_criterion(g), all_eigenvalues_one(g)) << e.name;
    EXPECT_TRUE(thm_galois_consistency(g).agree);
  }
}

TEST(SquareModN, Examples) {
  EXPECT_TRUE(check_sigma_squared_mod_n(classify(kMinus), 4));
  EXPECT_FALSE(check_sigma_squared_mod_n(classify(kMinus), 5));
  for (std::uint64_t n : {2, 5, 9, 25}) EXPECT_TRUE(check_sigma_squared_mod_n(classify(kUnip), n));
}

TEST(SquareModN, EquivalenceOnCatalog) {
  for (const auto& e : catalog(2)) {
    const auto g = classify(e.tau);
    for (std::uint64_t n : {5, 6, 7, 9, 25}) EXPECT_TRUE(thm_square_mod_n(g, n).agree) << e.name << " n=" << n;
  }
}

TEST(Witness, Examples) {
  EXPECT_EQ(find_witness_subgroup(classify(blocks::order3()), 3), span(3, {{2, 1}}));
  EXPECT_EQ(find_witness_subgroup(classify(blocks::order4()), 2), span(2, {{1, 1}}));
  EXPECT_FALSE(find_witness_subgroup(classify(kMinus), 5).has_value());
}

TEST(Witness, FastSearchMatchesExhaustive) {
  for (const auto& e : catalog(1)) {
    const auto g = classify(e.tau);
    for (Residue n : {2, 3, 4, 5, 6}) {
      const TorsionModule t(n, 1);
      EXPECT_EQ(find_witness_subgroup(g, t), find_witness_subgroup_exhaustive(g, t)) << e.name << " n=" << n;
    }
  }
}

TEST(Raynaud, Examples) {
  const auto a = raynaud_criterion(classify(blocks::unipotent(3)), 3);
  EXPECT_TRUE(a.hypothesis);
  EXPECT_EQ(a.conclusion, true);
  const auto b = raynaud_criterion(classify(kMinus), 2);
  EXPECT_FALSE(b.hypothesis);
  EXPECT_FALSE(galois_criterion(classify(kMinus)));
  EXPECT_NE(b.note.find("not semistable"), std::string::npos);
  EXPECT_FALSE(raynaud_criterion(classify(kMinus), 3).hypothesis);
}

TEST(LevelStructure, Examples) {
  const auto id = level_structure_criterion(classify(IntMatrix::identity(4)), 7, Polarization::principal(2));
  ASSERT_TRUE(id.constructed.has_value());
  EXPECT_EQ(*id.constructed, Subgroup(TorsionModule(7, 2), {{1, 0, 0, 0}, {0, 1, 0, 0}}));

  const auto u5 = level_structure_criterion(classify(blocks::unipotent(5)), 5, Polarization::principal(1));
  ASSERT_TRUE(u5.constructed.has_value());
  EXPECT_TRUE(u5.converse.agree);
  EXPECT_EQ(*u5.constructed, span(5, {{1, 0}}));

  const auto m = level_structure_criterion(classify(kMinus), 5, Polarization::principal(1));
  EXPECT_FALSE(m.found);
  EXPECT_TRUE(m.forward.agree);
}

TEST(LevelStructure, DegreeObstruction) {
  const Polarization five{Integer(5) * IntMatrix::identity(2)};
  EXPECT_EQ(kind_of([&] { fixed_lagrangian_from_semistable(classify(IntMatrix::identity(2)), 5, five); }),
            ErrorKind::DegreeObstruction);
  EXPECT_EQ(kind_of([] { fixed_lagrangian_from_semistable(classify(kMinus), 5, Polarization::principal(1)); }),
            ErrorKind::HypothesisNotMet);
}

TEST(Extension, Examples) {
  EXPECT_TRUE(semistable_after_extension(classify(blocks::order3()), 3));
  EXPECT_TRUE(semistable_after_extension(classify(kMinus), 2));
  EXPECT_FALSE(semistable_after_extension(classify(blocks::order4()), 2));
  EXPECT_TRUE(semistable_after_extension(classify(blocks::order4()), 4));
  EXPECT_EQ(minimal_semistable_degree(classify(blocks::order6())), 6u);
  EXPECT_EQ(minimal_semistable_degree(classify(blocks::neg_unipotent(2))), 2u);
}

TEST(Pressred, Examples) {
  const auto a = pressred_check(classify(kMinus), Polarization::principal(1));
  EXPECT_TRUE(a.hypothesis);
  EXPECT_TRUE(a.agree);
  const auto b = pressred_check(classify(blocks::order4()), Polarization::principal(1));
  EXPECT_TRUE(b.agree);
  EXPECT_EQ(kind_of([] { pressred_check(classify(blocks::order3()), Polarization::principal(1)); }),
            ErrorKind::HypothesisNotMet);
}

TEST(Exceptional, Degrees) {
  EXPECT_EQ(exceptional_degree(2), 4u);
  EXPECT_EQ(exceptional_degree(3), 3u);
  EXPECT_EQ(exceptional_degree(4), 2u);
}

TEST(Exceptional, Examples) {
  const auto a = exceptional_criterion(classify(blocks::order3()), 3);
  EXPECT_TRUE(a.verdict.hypothesis);
  EXPECT_EQ(a.verdict.conclusion, true);
  const auto b = exceptional_criterion(classify(kMinus), 2);
  EXPECT_TRUE(b.verdict.hypothesis);
  EXPECT_TRUE(b.verdict.agree);
  const auto c = exceptional_criterion(classify(kMinus), 4);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, span(4, {{2, 0}, {0, 2}}));
  EXPECT_EQ(c.degree, 2u);
  EXPECT_EQ(c.verdict.conclusion, true);
}

TEST(Elliptic, MinusIdentityAtThree) {
  const auto vs = elliptic_criteria(classify(kMinus, 3));
  ASSERT_EQ(vs.size(), 6u);
  for (const auto& v : vs) EXPECT_TRUE(v.agree) << v.id;
  EXPECT_EQ(vs[2].id, "elliptic-c");
  EXPECT_TRUE(vs[2].hypothesis);
  EXPECT_EQ(vs[2].note, "left=true right=true");
}

TEST(Elliptic, OrderThreeHasInvariantPointOfOrderThree) {
  const auto vs = elliptic_criteria(classify(blocks::order3(), 0));
  EXPECT_EQ(vs[1].id, "elliptic-b");
  EXPECT_EQ(vs[1].note, "left=true right=true");
}

TEST(Elliptic, ConsistentOnCatalog) {
  for (const auto& e : catalog(1)) {
    for (std::uint64_t p : {0, 5, 7}) {
      for (const auto& v : elliptic_criteria(classify(e.tau, p))) EXPECT_TRUE(v.agree) << e.name << " " << v.id;
    }
  }
  EXPECT_THROW(elliptic_criteria(classify(IntMatrix::identity(4))), Error);
}

TEST(Elliptic, ResidueCharacteristicExcludesClauses) {
  const auto vs = elliptic_criteria(classify(kMinus, 3));
  EXPECT_FALSE(vs[1].hypothesis);  // needs p != 3
  const auto ws = elliptic_criteria(classify(IntMatrix::identity(2), 2));
  EXPECT_FALSE(ws[0].hypothesis);
}

TEST(Paddcor, Examples) {
  const auto a = paddcor_criteria(classify(kMinus, 3));
  EXPECT_TRUE(a[0].hypothesis);
  EXPECT_TRUE(a[0].agree);
  const auto b = paddcor_criteria(classify(blocks::order3(), 2));
  EXPECT_TRUE(b[1].hypothesis);
  EXPECT_TRUE(b[1].agree);
  const auto c = paddcor_criteria(classify(blocks::order4(), 3));
  EXPECT_TRUE(c[0].agree);
  EXPECT_FALSE(find_witness_subgroup(classify(blocks::order4(), 3), 4).has_value());
  EXPECT_EQ(kind_of([] { paddcor_criteria(classify(IntMatrix::identity(2))); }), ErrorKind::HypothesisNotMet);
}

TEST(EigenvalueOrder, Examples) {
  EXPECT_TRUE(eigenvalue_order_check(classify(kMinus), 2));
  EXPECT_FALSE(eigenvalue_order_check(classify(blocks::order3()), 2));
  EXPECT_TRUE(eigenvalue_order_check(classify(kUnip), 1));
}

TEST(FixedPerp, HoldsForSemistableCatalog) {
  for (const auto& e : catalog(2)) {
    const auto g = classify(e.tau);
    for (std::uint64_t n = 2; n <= 9; ++n) EXPECT_TRUE(thm_fixed_perp(g, n).agree) << e.name << " n=" << n;
  }
}

TEST(Conjugation, VerdictsInvariant) {
  for (const auto& e : catalog(1)) {
    const auto base = classify(e.tau);
    const auto conj = classify(random_symplectic_conjugate(e.tau, 42).tau);
    EXPECT_EQ(galois_criterion(base), galois_criterion(conj));
    for (std::uint64_t n : {2, 3, 4, 5}) {
      EXPECT_EQ(find_witness_subgroup(base, n).has_value(), find_witness_subgroup(conj, n).has_value()) << e.name;
    }
  }
}

TEST(FixedLagrangian, ConstructionMatchesEnumeration) {
  for (const auto& e : catalog(2)) {
    const auto g = classify(e.tau);
    for (Residue n : {2, 3, 4, 5, 7}) {
      if (g.d == 2 && n > 3) continue;
      const TorsionModule t(n, g.d);
      const auto fast = find_fixed_lagrangian(g, t);
      const auto full = find_fixed_lagrangian_exhaustive(g, t);
      ASSERT_EQ(fast.has_value(), full.has_value()) << e.name << " n=" << n;
      if (fast) {
        EXPECT_TRUE(is_maximal_isotropic(*fast));
        EXPECT_TRUE(fixed_subgroup(g.tau, t).contains(*fast));
      }
    }
  }
}
