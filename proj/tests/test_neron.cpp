#include <gtest/gtest.h>

#include "tamelab/catalog.hpp"
#include "tamelab/neron.hpp"
#include "tamelab/random.hpp"

using namespace tamelab;

namespace {

const IntMatrix kMinus = -IntMatrix::identity(2);

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Invariants, MinusIdentity) {
  const auto inv = neron_invariants(classify(kMinus, 3));
  EXPECT_EQ(inv.a, 0u);
  EXPECT_EQ(inv.u, 1u);
  EXPECT_EQ(inv.t, 0u);
  EXPECT_EQ(inv.phi, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(inv.phi_prime, (std::vector<Integer>{2, 2}));
}

TEST(Invariants, GoodReduction) {
  const auto inv = neron_invariants(classify(IntMatrix::identity(4)));
  EXPECT_EQ(inv.a, 2u);
  EXPECT_EQ(inv.u, 0u);
  EXPECT_TRUE(inv.phi.empty());
}

TEST(Invariants, OrderThree) {
  const auto inv = neron_invariants(classify(blocks::order3()));
  EXPECT_EQ(inv.a, 0u);
  EXPECT_EQ(inv.u, 1u);
  EXPECT_EQ(inv.phi, (std::vector<Integer>{3}));
}

TEST(Invariants, PrimeToPPart) {
  const auto inv = neron_invariants(classify(blocks::order3(), 2));
  EXPECT_EQ(inv.phi_prime, (std::vector<Integer>{3}));
  const auto four = neron_invariants(classify(block_sum({blocks::order4(), blocks::order3()}), 5));
  EXPECT_EQ(four.phi_prime_order(), 6);
}

TEST(Invariants, RanksAddUpOnCatalog) {
  for (const auto& e : catalog(2, true)) {
    const auto g = classify(e.tau);
    const auto inv = neron_invariants(g);
    EXPECT_EQ(inv.a + inv.u + inv.t, g.d) << e.name;
    EXPECT_EQ(inv.t, 0u);
  }
}

TEST(Invariants, InfiniteOrderRejected) {
  EXPECT_EQ(kind_of([] { neron_invariants(classify(blocks::unipotent(1))); }), ErrorKind::NotPotentiallyGood);
}

TEST(Invariants, ConjugationInvariant) {
  for (const auto& e : catalog(2, true)) {
    const auto a = neron_invariants(classify(e.tau));
    const auto b = neron_invariants(classify(random_symplectic_conjugate(e.tau, 99).tau));
    EXPECT_EQ(a.a, b.a);
    EXPECT_EQ(a.phi, b.phi) << e.name;
  }
}

TEST(Torsion, Examples) {
  const auto m = neron_torsion(classify(kMinus, 3), 4);
  EXPECT_EQ(m.structure, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(m.two_a, 0u);
  EXPECT_EQ(m.phi_n, (std::vector<Integer>{2, 2}));
  EXPECT_TRUE(m.identity_holds);
  const auto id = neron_torsion(classify(IntMatrix::identity(4)), 6);
  EXPECT_EQ(id.fixed_order, 1296);
  EXPECT_TRUE(id.phi_n.empty());
  EXPECT_EQ(id.two_a, 4u);
  const auto o3 = neron_torsion(classify(blocks::order3()), 3);
  EXPECT_EQ(o3.fixed_order, 3);
  EXPECT_EQ(o3.phi_n, (std::vector<Integer>{3}));
  EXPECT_TRUE(o3.identity_holds);
  EXPECT_EQ(kind_of([] { neron_torsion(classify(kMinus, 3), 3); }), ErrorKind::ResidueCharacteristic);
}

TEST(Torsion, KernelCountIdentityOnCatalog) {
  for (const auto& e : catalog(2, true)) {
    const auto g = classify(e.tau);
    for (std::uint64_t n = 2; n <= 9; ++n) EXPECT_TRUE(neron_torsion(g, n).identity_holds) << e.name << " n=" << n;
  }
}

TEST(Level2, Examples) {
  const auto a = verify_neron2(classify(kMinus, 3), Polarization::principal(1));
  EXPECT_TRUE(a.agree);
  EXPECT_TRUE(verify_neron2(classify(IntMatrix::identity(2)), Polarization::principal(1)).agree);
  const auto g = classify(block_sum({kMinus, IntMatrix::identity(2)}));
  const auto inv = neron_invariants(g);
  EXPECT_EQ(inv.a, 1u);
  EXPECT_EQ(inv.u, 1u);
  EXPECT_EQ(inv.phi_prime, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(neron_torsion(g, 2).b, 4u);
  EXPECT_TRUE(verify_neron2(g, Polarization::principal(2)).agree);
}

TEST(Level2, HypothesisRequired) {
  EXPECT_EQ(kind_of([] { verify_neron2(classify(blocks::order3()), Polarization::principal(1)); }),
            ErrorKind::HypothesisNotMet);
  EXPECT_EQ(kind_of([] { verify_neron2(classify(kMinus, 2), Polarization::principal(1)); }),
            ErrorKind::WildRamification);
}

TEST(Level3, Examples) {
  EXPECT_TRUE(verify_neron3(classify(blocks::order3()), Polarization::principal(1)).agree);
  EXPECT_TRUE(verify_neron3(classify(IntMatrix::identity(4)), Polarization::principal(2)).agree);
  const auto g = classify(block_sum({blocks::order3(), IntMatrix::identity(2)}));
  EXPECT_EQ(neron_torsion(g, 3).fixed_order, 27);
  EXPECT_EQ(neron_invariants(g).phi_prime, (std::vector<Integer>{3}));
  EXPECT_TRUE(verify_neron3(g, Polarization::principal(2)).agree);
}

TEST(Level4, Examples) {
  EXPECT_TRUE(verify_neron4(classify(kMinus, 3), Neron4Mode::TrivialMod2).agree);
  EXPECT_TRUE(verify_neron4(classify(IntMatrix::identity(4)), Neron4Mode::TrivialMod2).agree);
  const auto g = classify(block_sum({kMinus, IntMatrix::identity(2)}));
  EXPECT_EQ(abelian_invariants(fixed_subgroup(g.tau, 4)), (std::vector<Integer>{2, 2, 4, 4}));
  EXPECT_TRUE(verify_neron4(g, Neron4Mode::TrivialMod2).agree);
  EXPECT_TRUE(verify_neron4(g, Neron4Mode::Lagrangian4, Polarization::principal(2)).agree);
  EXPECT_EQ(kind_of([] { verify_neron4(classify(blocks::order4()), Neron4Mode::TrivialMod2); }),
            ErrorKind::HypothesisNotMet);
}

TEST(TorsionKilled, Examples) {
  EXPECT_TRUE(randm_check(kMinus, 2, 1, 2).agree);
  EXPECT_TRUE(randm_check(IntMatrix::identity(2), 2, 1, 2).agree);
  EXPECT_TRUE(randm_check(blocks::order4(), 2, 1, 2).agree);
  EXPECT_EQ(kind_of([] { randm_check(blocks::order3(), 2, 1, 2); }), ErrorKind::HypothesisNotMet);
}

TEST(RankBound, HoldsOnCatalog) {
  for (const auto& e : catalog(2, true)) EXPECT_TRUE(component_rank_bound(classify(e.tau)).agree) << e.name;
}
