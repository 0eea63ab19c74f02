/* Copyright 2026 The qsep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qsep/generators.hpp"
#include "qsep/measures.hpp"
#include "test_support.hpp"

namespace qsep {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState bell() { return PureState({2, 2}, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }
PureState zero_zero() { return PureState({2, 2}, {1.0, 0.0, 0.0, 0.0}); }

TEST(DE, ProductStatesVanish) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_LE(d_e(random_product_state({2, 3, 2}, seed)), 1e-18);
    EXPECT_LE(d_e(random_product_state({2, 2}, seed)), 1e-18);
  }
}

TEST(DE, TwoQubitIsSquaredDeterminant) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto s = random_state({2, 2}, seed);
    const double expected = std::norm(s[0] * s[3] - s[1] * s[2]);
    EXPECT_EQ(d_e(s), expected);
    EXPECT_NEAR(d_e(s), det_invariant(s) * det_invariant(s), 1e-15);
  }
}

TEST(DE, OracleAgreesOnSmallSystems) {
  for (const Dims& dims : {Dims{2, 2, 2}, Dims{3, 3}, Dims{2, 3, 2}})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto s = random_state(dims, seed);
      EXPECT_NEAR(d_e(s), testing::brute_force_d_e(s), 1e-14);
      EXPECT_NEAR(testing::sparse_brute_force_d_e(s), testing::brute_force_d_e(s), 1e-14);
    }
}

TEST(DE, GhzAndWClosedForms) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const double ghz_oracle = testing::sparse_brute_force_d_e(ghz(n));
    const double w_oracle = testing::sparse_brute_force_d_e(w(n));
    const double ghz_formula = (std::ldexp(1.0, static_cast<int>(n) - 1) - 1.0) / 4.0;
    const double w_formula = (n - 1.0) / (2.0 * n);
    EXPECT_NEAR(ghz_oracle, ghz_formula, 1e-12) << n;
    EXPECT_NEAR(w_oracle, w_formula, 1e-12) << n;
    EXPECT_NEAR(d_e(ghz(n)), ghz_oracle, 1e-12) << n;
    EXPECT_NEAR(d_e(w(n)), w_oracle, 1e-12) << n;
  }
}

TEST(DE, ZeroExactlyWhenSeparable) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = random_product_state({2, 2, 2}, seed);
    const auto e = random_state({2, 2, 2}, seed);
    EXPECT_TRUE(is_separable_minors(p).separable);
    EXPECT_LE(d_e(p), 1e-20);
    EXPECT_FALSE(is_separable_minors(e).separable);
    EXPECT_GT(d_e(e), 1e-6);
  }
}

TEST(DE, RejectsUnnormalized) {
  const PureState s({2, 2}, {1.0, 1.0, 0.0, 0.0}, Normalization::allow_unnormalized);
  EXPECT_THROW(d_e(s), invalid_state_error);
}

TEST(DEMax, Examples) {
  EXPECT_TRUE(d_e_max_two_qubit_check(bell()));
  EXPECT_FALSE(d_e_max_two_qubit_check(zero_zero()));
  EXPECT_THROW(d_e_max_two_qubit_check(ghz(3)), shape_error);
}

TEST(DEMax, RealMaximalFamilies) {
  // Normalization 2x^2 + 2y^2 = 1 puts |ad - bc|^2 = (x^2 + y^2)^2 at 1/4.
  for (int k = 0; k < 64; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / 64.0;
    const double x = kInvSqrt2 * std::cos(theta);
    const double y = kInvSqrt2 * std::sin(theta);
    EXPECT_TRUE(d_e_max_two_qubit_check(PureState({2, 2}, {x, y, -y, x})));
    EXPECT_TRUE(d_e_max_two_qubit_check(PureState({2, 2}, {x, y, y, -x})));
  }
}

TEST(DetInvariant, Examples) {
  EXPECT_NEAR(det_invariant(bell()), 0.5, 1e-15);
  EXPECT_NEAR(det_invariant(random_product_state({3, 3}, 1)), 0.0, 1e-15);
  EXPECT_THROW(det_invariant(random_state({2, 3}, 1)), shape_error);
}

TEST(DetInvariant, LocalUnitaryInvariance) {
  std::mt19937_64 rng(31);
  for (std::size_t d = 2; d <= 6; ++d)
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_state({d, d}, 1000 * d + trial);
      const auto t = testing::apply_random_local_unitaries(s, rng);
      EXPECT_NEAR(det_invariant(s), det_invariant(t), 1e-9);
    }
}

TEST(DetInvariant, GramDeterminantIdentity) {
  for (std::size_t d = 2; d <= 8; ++d)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = random_state({d, d}, seed);
      const double lhs = det(reduced_density(s, 2)).real();
      const double rhs = std::pow(det_invariant(s), 2);
      EXPECT_LE(std::abs(lhs - rhs), 1e-8 * rhs) << d;
    }
}

TEST(Schmidt, Examples) {
  const auto sep = schmidt_two_qubit(zero_zero());
  EXPECT_EQ(sep.epsilon, 0.0);
  EXPECT_EQ(sep.lambda_plus, 1.0);
  EXPECT_EQ(sep.lambda_minus, 0.0);

  const auto b = schmidt_two_qubit(bell());
  EXPECT_NEAR(b.epsilon, 0.5, 1e-15);
  EXPECT_NEAR(b.lambda_plus, 0.5, 1e-7);
  EXPECT_NEAR(b.lambda_minus, 0.5, 1e-7);

  const auto s = schmidt_two_qubit(PureState({2, 2}, {std::sqrt(0.9), 0.0, 0.0, std::sqrt(0.1)}));
  EXPECT_NEAR(s.epsilon, 0.3, 1e-15);
  EXPECT_NEAR(s.lambda_plus, 0.9, 1e-14);
  EXPECT_NEAR(s.lambda_minus, 0.1, 1e-14);
}

TEST(Schmidt, MatchesMarginalSpectrum) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto st = random_state({2, 2}, seed);
    const auto s = schmidt_two_qubit(st);
    EXPECT_LE(s.epsilon, 0.5);
    EXPECT_NEAR(s.lambda_plus + s.lambda_minus, 1.0, 1e-12);
    EXPECT_NEAR(s.lambda_plus * s.lambda_minus, s.epsilon * s.epsilon, 1e-12);
    const auto ev = hermitian_eigenvalues(party_marginal(st, 1));
    EXPECT_NEAR(ev[0], s.lambda_plus, 1e-10);
    EXPECT_NEAR(ev[1], s.lambda_minus, 1e-10);
  }
}

TEST(Schmidt, RejectsWrongShapeAndNorm) {
  EXPECT_THROW(schmidt_two_qubit(ghz(3)), shape_error);
  const PureState big({2, 2}, {1.0, 0.0, 0.0, 1.0}, Normalization::allow_unnormalized);
  EXPECT_THROW(schmidt_two_qubit(big), invalid_state_error);
}

TEST(LuEquiv, SelfAndRotated) {
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = random_state({2, 2}, seed);
    EXPECT_TRUE(lu_equiv_two_qubit(s, s));
    EXPECT_TRUE(lu_equiv_two_qubit(s, testing::apply_random_local_unitaries(s, rng)));
  }
  EXPECT_FALSE(lu_equiv_two_qubit(bell(), zero_zero()));
  EXPECT_THROW(lu_equiv_two_qubit(bell(), ghz(3)), shape_error);
}

TEST(LuEquiv, NielsenPair) {
  const double gamma = std::numbers::pi / 6.0;
  const double sg = std::sin(gamma);
  const double root = std::sqrt(1.0 - sg * sg);
  const double alpha_plus = 0.5 * (1.0 + root);
  const double alpha_minus = 0.5 * (1.0 - root);
  EXPECT_NEAR(std::sqrt(alpha_plus) * std::sqrt(alpha_minus), sg / 2.0, 1e-15);
  const PureState schmidt_form({2, 2}, {std::sqrt(alpha_plus), 0.0, 0.0, std::sqrt(alpha_minus)});
  const PureState rotated({2, 2}, {kInvSqrt2, 0.0, std::cos(gamma) * kInvSqrt2,
                                   std::sin(gamma) * kInvSqrt2});
  EXPECT_TRUE(lu_equiv_two_qubit(schmidt_form, rotated));
  EXPECT_NEAR(d_e(rotated), sg * sg / 4.0, 1e-15);
}

}  // namespace
}  // namespace qsep
