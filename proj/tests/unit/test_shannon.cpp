#include <gtest/gtest.h>

#include "kpairs/shannon.hpp"

using namespace kpairs;

TEST(SetInequality, TwoSets) {
  EXPECT_TRUE(verify_shannon_type(2));
  EXPECT_FALSE(verify_shannon_type(2, true));
}

TEST(SetInequality, ThreeSets) {
  const ShannonCheck c = minimize_set_inequality(3);
  EXPECT_EQ(c.status, SimplexStatus::kOptimal);
  EXPECT_EQ(c.minimum, Rational(0));
  EXPECT_EQ(c.ground_variables, 7u);
  EXPECT_EQ(c.entropy_coordinates, 127u);
  EXPECT_EQ(c.elemental_inequalities, 7u + 21u * 32u);
  EXPECT_FALSE(verify_shannon_type(3, true));
}

TEST(SetInequality, RejectsOtherSizes) {
  EXPECT_THROW(minimize_set_inequality(1), std::invalid_argument);
  EXPECT_THROW(minimize_set_inequality(4), std::invalid_argument);
}
