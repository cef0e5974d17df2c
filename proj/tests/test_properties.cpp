// Copyright 2026 The btensor Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace btensor {
namespace {

void expect_clean(const testing::SuiteResult& r) {
  EXPECT_GT(r.checks, 0);
  EXPECT_EQ(r.violations, 0) << r.first_violation;
}

TEST(PropertySuites, EquivalenceLadder) { expect_clean(testing::equivalence_ladder(300, 1)); }

TEST(PropertySuites, Heredity) { expect_clean(testing::heredity(100, 2)); }

TEST(PropertySuites, ConeClosure) { expect_clean(testing::cone(100, 3)); }

TEST(PropertySuites, SplitConverse) { expect_clean(testing::converse_decomposition(100, 4)); }

TEST(PropertySuites, SoundnessDimensionTwo) { expect_clean(testing::soundness_n2(100, 5)); }

TEST(PropertySuites, SoundnessZ) { expect_clean(testing::soundness_z(20, 6, 16)); }

TEST(PropertySuites, SoundnessEvenSymmetric) {
  expect_clean(testing::soundness_even_symmetric(20, 7, 16));
}

TEST(PropertySuites, LaplacianBounds) { expect_clean(testing::laplacian_suite(10, 8, 16)); }

TEST(PropertySuites, SymmetricBDefiniteness) {
  expect_clean(testing::symmetric_b_definiteness(100, 9));
}

}  // namespace
}  // namespace btensor
