#include <gtest/gtest.h>

#include "tamelab/howell.hpp"
#include "tamelab/linalg.hpp"
#include "tamelab/random.hpp"
#include "tamelab/smith.hpp"
#include "tamelab/suites.hpp"

using namespace tamelab;

namespace {

ModMatrix mod_rows(Residue n, std::size_t cols, const std::vector<std::vector<Residue>>& rows) {
  return ModMatrix(n, cols, rows);
}

}  // namespace

TEST(Smith, DiagonalTwoThree) {
  const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.divisors, (std::vector<Integer>{1, 6}));
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST(Smith, ZeroMatrix) {
  const auto s = smith_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(s.divisors, (std::vector<Integer>{0, 0}));
}

TEST(Smith, MinusTwoIdentity) {
  const IntMatrix a{{-2, 0}, {0, -2}};
  const auto s = smith_normal_form(a);
  EXPECT_EQ(s.divisors, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(s.U * a * s.V, s.D);
}

TEST(Smith, ReconstructsFromInverses) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
    const IntMatrix a = detail::random_int_matrix(rng, r, c, 5);
    const auto s = smith_normal_form(a);
    EXPECT_EQ(inverse_unimodular(s.U) * s.D * inverse_unimodular(s.V), a);
  }
}

TEST(Smith, DivisorsMatchMinorGcds) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = detail::random_int_matrix(rng, 1 + rng.below(4), 1 + rng.below(4), 5);
    const auto s = smith_normal_form(a);
    Integer prod = 1;
    for (std::size_t k = 0; k < s.divisors.size(); ++k) {
      prod *= s.divisors[k];
      EXPECT_EQ(prod, detail::determinant_divisor(a, k + 1));
    }
  }
}

TEST(Smith, TiesBrokenRowMajor) {
  const auto a = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  const auto b = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.V, b.V);
  EXPECT_EQ(a.divisors, (std::vector<Integer>{2, 4}));
}

TEST(Howell, AlreadyCanonical) {
  const ModMatrix a = mod_rows(4, 2, {{2, 0}, {0, 2}});
  EXPECT_EQ(howell_form(a), a);
  const ModMatrix b = mod_rows(4, 2, {{2, 2}});
  EXPECT_EQ(howell_form(b), b);
}

TEST(Howell, CompletesSpanOfOneTwo) {
  const ModMatrix a = mod_rows(4, 2, {{1, 2}, {2, 0}});
  const ModMatrix h = howell_form(a);
  EXPECT_EQ(h, mod_rows(4, 2, {{1, 2}}));
  EXPECT_EQ(detail::brute_span(h), detail::brute_span(a));
  EXPECT_EQ(span_order(h), 4);
}

TEST(Howell, IdempotentAndSpanPreserving) {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    const Residue n = 2 + static_cast<Residue>(rng.below(3));
    const std::size_t c = 1 + rng.below(4), r = 1 + rng.below(3);
    const ModMatrix a = detail::random_mod_matrix(rng, n, r, c);
    const ModMatrix h = howell_form(a);
    EXPECT_EQ(howell_form(h), h);
    if (h.rows() > 0) {
      EXPECT_EQ(detail::brute_span(h), detail::brute_span(a));
    } else {
      EXPECT_EQ(detail::brute_span(a).size(), 1u);
    }
  }
}

TEST(Howell, EqualSpansGiveEqualForms) {
  Rng rng(8);
  for (int t = 0; t < 300; ++t) {
    const Residue n = 2 + static_cast<Residue>(rng.below(3));
    const ModMatrix a = detail::random_mod_matrix(rng, n, 1 + rng.below(3), 2);
    const ModMatrix b = detail::random_mod_matrix(rng, n, 1 + rng.below(3), 2);
    EXPECT_EQ(detail::brute_span(a) == detail::brute_span(b), howell_form(a) == howell_form(b));
  }
}

TEST(Kernel, ZeroAndIdentity) {
  EXPECT_EQ(span_order(kernel_mod_n(ModMatrix(6, 2, 2))), 36);
  EXPECT_EQ(span_order(kernel_mod_n(ModMatrix::identity(6, 2))), 1);
}

TEST(Kernel, OrderThreeBlockModThree) {
  const IntMatrix tau{{0, -1}, {1, -1}};
  const ModMatrix k = kernel_mod_n(ModMatrix(tau - IntMatrix::identity(2), 3));
  EXPECT_EQ(k, mod_rows(3, 2, {{1, 2}}));
  EXPECT_EQ(detail::brute_span(k), detail::brute_span(mod_rows(3, 2, {{2, 1}})));
  EXPECT_EQ(span_order(k), 3);
}

TEST(Kernel, MatchesBruteForce) {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const Residue n = 2 + static_cast<Residue>(rng.below(5));
    const ModMatrix a = detail::random_mod_matrix(rng, n, 2, 2);
    std::size_t count = 0;
    for (Residue x = 0; x < n; ++x) {
      for (Residue y = 0; y < n; ++y) {
        count += (a(0, 0) * x + a(0, 1) * y) % n == 0 && (a(1, 0) * x + a(1, 1) * y) % n == 0;
      }
    }
    EXPECT_EQ(span_order(kernel_mod_n(a)), count);
  }
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(IntMatrix::identity(2)), (IntPoly{1, -2, 1}));
  EXPECT_EQ(char_poly(-IntMatrix::identity(2)), (IntPoly{1, 2, 1}));
  EXPECT_EQ(char_poly(IntMatrix{{0, -1}, {1, -1}}), (IntPoly{1, 1, 1}));
}

TEST(CharPoly, ConjugationInvariant) {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix u = random_symplectic(2, rng);
    const IntMatrix a = detail::random_int_matrix(rng, 4, 4, 4);
    EXPECT_EQ(char_poly(u * a * symplectic_inverse(u)), char_poly(a));
  }
}

TEST(ExteriorPower, Examples) {
  const IntMatrix a{{2, 3}, {5, 7}};
  EXPECT_EQ(exterior_power(a, 0), (IntMatrix{{1}}));
  EXPECT_EQ(exterior_power(a, 2), (IntMatrix{{-1}}));
  const IntMatrix d = IntMatrix::diagonal({2, 3, 5, 7});
  EXPECT_EQ(exterior_power(d, 2), IntMatrix::diagonal({6, 10, 14, 15, 21, 35}));
}

TEST(ExteriorPower, MultiplicativeAndUnital) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = detail::random_int_matrix(rng, 4, 4, 3), b = detail::random_int_matrix(rng, 4, 4, 3);
    const std::size_t k = rng.below(5);
    EXPECT_EQ(exterior_power(a * b, k), exterior_power(a, k) * exterior_power(b, k));
    EXPECT_TRUE(exterior_power(IntMatrix::identity(4), k).is_identity());
  }
}

TEST(ExteriorPower, ModularAgreesWithIntegral) {
  const IntMatrix a{{1, 2, 0, 1}, {0, 1, 3, 0}, {2, 0, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(exterior_power(ModMatrix(a, 5), 2), ModMatrix(exterior_power(a, 2), 5));
}

TEST(Unipotent, Examples) {
  const auto id = is_unipotent(IntMatrix::identity(2));
  EXPECT_TRUE(id.unipotent);
  EXPECT_EQ(id.index, 0u);
  const auto u = is_unipotent(IntMatrix{{1, 1}, {0, 1}});
  EXPECT_TRUE(u.unipotent);
  EXPECT_EQ(u.index, 2u);
  const auto m = is_unipotent(-IntMatrix::identity(2));
  EXPECT_FALSE(m.unipotent);
  EXPECT_FALSE(m.index.has_value());
}

TEST(Reduction, RingHomomorphism) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = detail::random_int_matrix(rng, 3, 3, 9), b = detail::random_int_matrix(rng, 3, 3, 9);
    const Residue n = 2 + static_cast<Residue>(rng.below(30));
    EXPECT_EQ(ModMatrix(a * b, n), ModMatrix(a, n) * ModMatrix(b, n));
    EXPECT_EQ(ModMatrix(a + b, n), ModMatrix(a, n) + ModMatrix(b, n));
  }
}

TEST(Errors, ShapeMismatch) {
  EXPECT_THROW((void)(IntMatrix(2, 3) * IntMatrix(2, 3)), Error);
  EXPECT_THROW((void)char_poly(IntMatrix(2, 3)), Error);
}
