#include <gtest/gtest.h>

#include "coweight/duality.hpp"

using namespace coweight;

TEST(Duality, HexagonalIndexSix) {
  const auto rep = verify_dual_counts(2, 6, Relation::isometry);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.count, 3u);
  EXPECT_EQ(rep.dual_count, 3u);
  const auto proper = verify_dual_counts(2, 6, Relation::proper);
  EXPECT_TRUE(proper.passed());
  EXPECT_EQ(proper.count, 4u);
}

TEST(Duality, IndexOne) {
  for (int n = 2; n <= 4; ++n)
    for (auto rel : {Relation::isometry, Relation::proper}) {
      const auto rep = verify_dual_counts(n, 1, rel);
      EXPECT_TRUE(rep.passed());
      EXPECT_EQ(rep.count, 1u);
      EXPECT_EQ(rep.dual_count, 1u);
    }
}

TEST(Duality, ThreeDimensions) {
  for (std::int64_t k = 1; k <= 20; ++k)
    for (auto rel : {Relation::isometry, Relation::proper}) {
      const auto rep = verify_dual_counts(3, k, rel);
      EXPECT_TRUE(rep.passed()) << "k=" << k;
      EXPECT_EQ(rep.burnside, rep.count);
    }
}

TEST(Duality, RejectsTrivialRelation) {
  EXPECT_THROW(verify_dual_counts(2, 3, Relation::none), std::invalid_argument);
}
