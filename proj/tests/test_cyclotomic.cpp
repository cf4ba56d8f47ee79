#include <gtest/gtest.h>

#include "tamelab/cyclotomic.hpp"
#include "tamelab/linalg.hpp"

using namespace tamelab;

TEST(NSet, Tables) {
  EXPECT_EQ(n_set(1).members, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(n_set(2).members, (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(n_set(3).members, (std::vector<std::uint64_t>{1, 2, 3, 4, 8}));
  EXPECT_EQ(n_set(4).members, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 8, 9, 16}));
  EXPECT_THROW(n_set(0), Error);
}

TEST(NSet, Nested) {
  for (unsigned k = 1; k < 8; ++k) {
    const auto a = n_set(k).members, b = n_set(k + 1).members;
    EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end())) << k;
  }
}

TEST(CyclotomicPoly, Examples) {
  EXPECT_EQ(cyclotomic_poly(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12), (IntPoly{1, 0, -1, 0, 1}));
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    IntPoly prod{1};
    for (auto d : divisors(n)) prod = prod * cyclotomic_poly(d);
    EXPECT_EQ(prod, IntPoly::x_pow_minus_one(n)) << n;
    EXPECT_EQ(cyclotomic_poly(n).degree(), static_cast<long>(euler_phi(n)));
  }
}

TEST(PowerMembership, Examples) {
  EXPECT_TRUE(power_membership(4, 2, 2));
  EXPECT_TRUE(power_membership(3, 2, 3));
  EXPECT_FALSE(power_membership(5, 2, 5));
  EXPECT_TRUE(power_membership(2, 2, 4));
  EXPECT_THROW(power_membership(0, 2, 2), Error);
}

TEST(PowerMembership, SquareOfZetaFourMinusOne) {
  const CyclotomicInteger z = CyclotomicInteger::zeta_power(4, 1) - CyclotomicInteger(4, IntPoly{1});
  EXPECT_EQ(z.pow(2), CyclotomicInteger(4, IntPoly{0, -2}));
}

TEST(PowerMembership, MonotoneInK) {
  for (std::uint64_t order = 2; order <= 24; ++order) {
    for (unsigned k = 1; k < 6; ++k) {
      for (unsigned long n = 2; n <= 10; ++n) {
        if (power_membership(order, k, n)) {
          EXPECT_TRUE(power_membership(order, k + 1, n));
        }
      }
    }
  }
}

TEST(PowerMembership, PrimeBoundaryWitnesses) {
  for (unsigned k = 1; k <= 6; ++k) {
    for (auto q : n_set(k).members) {
      if (q == 1) continue;
      const auto ell = prime_power(q)->first;
      EXPECT_TRUE(power_membership(ell, k, static_cast<unsigned long>(q))) << "k=" << k << " q=" << q;
    }
  }
}

TEST(PowerMembership, PrimePowerOrderNeedNotWitness) {
  // (zeta_4 - 1)^2 = -2 zeta_4 is not in 4 Z[i] although 4 lies in N(2).
  EXPECT_FALSE(power_membership(4, 2, 4));
}

TEST(QuasithmOracle, SweepIsClean) {
  const auto r = quasithm_oracle(4, 30, 60);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.checked, 0u);
  const auto small = quasithm_oracle(2, 5, 5);
  EXPECT_TRUE(small.pass());
}

TEST(ComputeR, Values) {
  EXPECT_EQ(compute_R(2, 2).value, 4);
  EXPECT_EQ(compute_R(2, 3).value, 3);
  EXPECT_EQ(compute_R(2, 4).value, 2);
  EXPECT_EQ(compute_R(2, 5).value, 1);
  EXPECT_TRUE(compute_R(2, 1).unbounded);
  EXPECT_EQ(compute_R(2, 2).admissible, (std::vector<std::uint64_t>{1, 2, 4}));
}

TEST(ComputeR, OneOutsideSmallModuli) {
  for (std::uint64_t n = 5; n <= 30; ++n) {
    if (n_set(2).contains(n)) continue;
    EXPECT_EQ(compute_R(2, n, 120).value, 1) << n;
  }
}

TEST(EigenvalueIntegrality, Examples) {
  EXPECT_TRUE(eigenvalue_integrality(IntPoly{1, 2, 1}, 4));
  EXPECT_TRUE(eigenvalue_integrality(cyclotomic_poly(3), 3));
  EXPECT_FALSE(eigenvalue_integrality(cyclotomic_poly(4), 3));
  EXPECT_THROW(eigenvalue_integrality(IntPoly{-2, 0, 1}, 2), Error);
}

TEST(CyclotomicFactor, Examples) {
  EXPECT_EQ(cyclotomic_factor(IntPoly{1, -2, 1}), (std::map<std::uint64_t, unsigned>{{1, 2}}));
  EXPECT_EQ(cyclotomic_factor(IntPoly{1, 1, 1}), (std::map<std::uint64_t, unsigned>{{3, 1}}));
  EXPECT_EQ(cyclotomic_factor(IntPoly{1, 0, -1, 0, 1}), (std::map<std::uint64_t, unsigned>{{12, 1}}));
  EXPECT_THROW(cyclotomic_factor(IntPoly{1, -3, 1}), Error);
  try {
    cyclotomic_factor(IntPoly{1, -3, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonCyclotomicFactor);
  }
}

TEST(CyclotomicFactor, ProductsRoundTrip) {
  const IntPoly p = cyclotomic_poly(1) * cyclotomic_poly(3) * cyclotomic_poly(3) * cyclotomic_poly(10);
  EXPECT_EQ(cyclotomic_factor(p), (std::map<std::uint64_t, unsigned>{{1, 1}, {3, 2}, {10, 1}}));
}
