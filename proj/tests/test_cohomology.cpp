#include <gtest/gtest.h>

#include "tamelab/catalog.hpp"
#include "tamelab/cohomology.hpp"

using namespace tamelab;

namespace {

const IntMatrix kMinus4 = -IntMatrix::identity(4);

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

TEST(Vanishing, Examples) {
  const auto g = classify(kMinus4);
  for (std::uint64_t n : {0, 2, 3, 5, 12}) EXPECT_TRUE(hk_vanishing(g, 2, n)) << n;
  EXPECT_FALSE(hk_vanishing(g, 1, 3));
  const auto u = classify(blocks::unipotent(1));
  for (std::uint64_t n : {0, 2, 7}) EXPECT_TRUE(hk_vanishing(u, 1, n));
}

TEST(Vanishing, RangeChecked) {
  const auto g = classify(kMinus4);
  EXPECT_EQ(kind_of([&] { hk_vanishing(g, 0, 5); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([&] { hk_vanishing(g, 4, 5); }), ErrorKind::OutOfRange);
}

TEST(Vanishing, SemistableCatalogAllLevels) {
  for (const auto& e : catalog(2)) {
    const auto g = classify(e.tau);
    if (!galois_criterion(g)) continue;
    for (std::size_t k = 1; k < 2 * g.d; ++k) {
      for (std::uint64_t n = 0; n <= 30; ++n) {
        if (n == 1) continue;
        EXPECT_TRUE(hk_vanishing(g, k, n)) << e.name << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(Action, SizeAndFunctoriality) {
  const IntMatrix t = block_sum({blocks::order6(), blocks::unipotent(2)});
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto a = cohomology_action(t, k, 0).integral;
    EXPECT_EQ(a.rows(), exterior_power(IntMatrix::identity(4), k).rows());
    EXPECT_EQ(cohomology_action(t.pow(5), k, 0).integral, a.pow(5));
    EXPECT_EQ(cohomology_action(t, k, 7).modular, ModMatrix(a, 7));
  }
  const IntMatrix s = block_sum({blocks::order4(), blocks::order3()});
  EXPECT_EQ(cohomology_action(t * s, 2, 0).integral,
            cohomology_action(t, 2, 0).integral * cohomology_action(s, 2, 0).integral);
}

TEST(Classify, WorkedExamples) {
  const auto a = highercohcor_classify(classify(kMinus4, 3), 2, 5);
  EXPECT_TRUE(a.condition_a);
  EXPECT_TRUE(a.condition_c);
  EXPECT_TRUE(a.equivalence.agree);

  const auto b = highercohcor_classify(classify(block_sum({blocks::order4(), blocks::order4()}), 3), 2, 5);
  EXPECT_FALSE(b.condition_a);
  EXPECT_FALSE(b.condition_c);
  EXPECT_TRUE(b.equivalence.agree);

  const auto c = highercohcor_classify(classify(block_sum({blocks::unipotent(1), IntMatrix::identity(2)})), 3, 7);
  EXPECT_TRUE(c.condition_a);
  EXPECT_TRUE(c.condition_c);
}

TEST(Classify, ExcludedLevels) {
  const auto g = classify(kMinus4);
  EXPECT_EQ(kind_of([&] { highercohcor_classify(g, 2, 3); }), ErrorKind::PreconditionExcluded);
  EXPECT_EQ(kind_of([&] { highercohcor_classify(g, 3, 5); }), ErrorKind::PreconditionExcluded);
  EXPECT_NO_THROW(highercohcor_classify(g, 3, 7));
}

TEST(Classify, EvenDegreeNeedsStarCondition) {
  const auto g = classify(kMinus4, 0);
  EXPECT_TRUE(highercohcor_classify(g, 2, 5).equivalence.hypothesis);
  const auto u = classify(block_sum({blocks::unipotent(1), IntMatrix::identity(2)}), 2);
  EXPECT_FALSE(highercohcor_classify(u, 2, 5).equivalence.hypothesis);
  EXPECT_TRUE(highercohcor_classify(u, 2, 5, true).equivalence.hypothesis);
}

TEST(Classify, EquivalenceOnCatalog) {
  for (const auto& e : catalog(2)) {
    const auto g = classify(e.tau);
    if (g.d != 2) continue;
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::uint64_t n : {5, 7, 8, 9}) {
        if (n_set(static_cast<unsigned>(k + 1)).contains(n)) continue;
        const auto c = highercohcor_classify(g, k, n);
        EXPECT_TRUE(c.equivalence.agree) << e.name << " k=" << k << " n=" << n;
        if (c.simplified) {
          EXPECT_TRUE(c.simplified->agree) << e.name;
        }
      }
    }
  }
}

TEST(ExtensionProbe, AgreesOnCatalog) {
  for (const auto& e : catalog(2, true)) {
    const auto g = classify(e.tau);
    if (g.d != 2) continue;
    EXPECT_TRUE(hk_extension_probe(g, 1, 5).agree) << e.name;
  }
}
