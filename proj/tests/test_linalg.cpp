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
#include <random>

#include <gtest/gtest.h>

#include "qsep/linalg.hpp"
#include "test_support.hpp"

namespace qsep {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(Linalg, Minor2Identity) {
  EXPECT_EQ(minor2(ComplexMatrix::identity(2), 0, 1, 0, 1), complex(1.0));
}

TEST(Linalg, Minor2BellMatrix) {
  const ComplexMatrix bell{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}};
  EXPECT_NEAR(std::abs(minor2(bell, 0, 1, 0, 1) - 0.5), 0.0, 1e-15);
}

TEST(Linalg, Minor2VanishesOnRankOne) {
  std::mt19937_64 rng(11);
  const auto x = testing::random_matrix(5, 1, rng);
  const auto y = testing::random_matrix(1, 4, rng);
  const auto m = x * y;
  scan_minors(m, [](const MinorEntry& e) {
    EXPECT_TRUE(negligible(e.value, e.scale, 1e-12));
    return true;
  });
}

TEST(Linalg, Minor2RejectsBadIndices) {
  const auto m = ComplexMatrix::identity(3);
  EXPECT_THROW(minor2(m, 1, 1, 0, 1), invalid_index_error);
  EXPECT_THROW(minor2(m, 0, 3, 0, 1), invalid_index_error);
  EXPECT_THROW(minor2(m, 0, 1, 2, 1), invalid_index_error);
}

TEST(Linalg, ScanMinorsVisitsEveryMinorOnce) {
  const ComplexMatrix m(4, 3);
  std::size_t visited = 0;
  OpCounter counter;
  EXPECT_TRUE(scan_minors(m, [&](const MinorEntry&) { return ++visited, true; }, &counter));
  EXPECT_EQ(visited, 6u * 3u);
  EXPECT_EQ(counter.multiplications, 2 * visited);
}

TEST(Linalg, DetBasics) {
  EXPECT_EQ(det(ComplexMatrix::identity(4)), complex(1.0));
  const std::vector<complex> diag{2.0, complex(0, 1), -3.0, 0.5};
  EXPECT_NEAR(std::abs(det(ComplexMatrix::diagonal(diag)) - complex(0, -3.0)), 0.0, 1e-15);
  const ComplexMatrix bell{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}};
  EXPECT_NEAR(std::abs(det(bell) - 0.5), 0.0, 1e-15);
  EXPECT_THROW(det(ComplexMatrix(2, 3)), shape_error);
}

TEST(Linalg, DetNeedsPivoting) {
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_EQ(det(swap), complex(-1.0));
}

TEST(Linalg, DetIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing::random_matrix(n, n, rng);
      const auto b = testing::random_matrix(n, n, rng);
      const complex lhs = det(a * b);
      const complex rhs = det(a) * det(b);
      EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::abs(rhs)) << "n=" << n;
    }
}

TEST(Linalg, EigenvaluesOfDiagonal) {
  const std::vector<complex> d{0.3, 0.7};
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 0.7, 1e-15);
  EXPECT_NEAR(ev[1], 0.3, 1e-15);
}

TEST(Linalg, EigenvaluesOfBellMarginal) {
  const std::vector<complex> d{0.5, 0.5};
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
  EXPECT_NEAR(ev[0], 0.5, 1e-15);
  EXPECT_NEAR(ev[1], 0.5, 1e-15);
}

TEST(Linalg, EigenvaluesOfComplexTwoByTwo) {
  // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
  const ComplexMatrix h{{2.0, complex(0, 1)}, {complex(0, -1), 2.0}};
  const auto ev = hermitian_eigenvalues(h);
  EXPECT_NEAR(ev[0], 3.0, 1e-13);
  EXPECT_NEAR(ev[1], 1.0, 1e-13);
}

TEST(Linalg, EigenvaluesSatisfyCharacteristicEquation) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto h = testing::random_hermitian(n, rng);
    const auto ev = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double l : ev) sum += l;
    EXPECT_NEAR(sum, trace(h).real(), 1e-9);
    EXPECT_TRUE(std::is_sorted(ev.rbegin(), ev.rend()));
    // det(H - lambda I) should vanish relative to the spectral scale.
    double scale = 1.0;
    for (double l : ev) scale *= std::max(1.0, std::abs(l)) * 2.0;
    for (double l : ev) {
      ComplexMatrix shifted = h;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= l;
      EXPECT_LE(std::abs(det(shifted)), 1e-9 * scale) << "n=" << n << " lambda=" << l;
    }
  }
}

TEST(Linalg, EigenvaluesRejectNonHermitian) {
  const ComplexMatrix m{{1.0, 2.0}, {0.0, 1.0}};
  EXPECT_THROW(hermitian_eigenvalues(m), shape_error);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(2, 3)), shape_error);
}

TEST(Linalg, GramSpectrumMatchesDeterminant) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = testing::random_matrix(n, n, rng);
      const auto ev = hermitian_eigenvalues(m * adjoint(m));
      double product = 1.0;
      for (double l : ev) {
        EXPECT_GE(l, -1e-10);
        product *= l;
      }
      const double expected = std::norm(det(m));
      EXPECT_LE(std::abs(product - expected), 1e-8 * expected) << "n=" << n;
    }
}

TEST(Linalg, Purity) {
  EXPECT_DOUBLE_EQ(purity(ComplexMatrix::diagonal(std::vector<complex>{1.0, 0.0})), 1.0);
  EXPECT_DOUBLE_EQ(purity(ComplexMatrix::diagonal(std::vector<complex>{0.5, 0.5})), 0.5);
  EXPECT_NEAR(purity(ComplexMatrix::diagonal(std::vector<complex>{0.9, 0.1})), 0.82, 1e-15);
  EXPECT_THROW(purity(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}), shape_error);
}

TEST(Linalg, ScaleAwareZeroTest) {
  EXPECT_TRUE(negligible(1e-11, 0.0, 1e-10));
  EXPECT_FALSE(negligible(1e-9, 0.5, 1e-10));
  // Large blocks get a proportionally larger allowance.
  EXPECT_TRUE(negligible(1e-5, 1e6, 1e-10));
}

}  // namespace
}  // namespace qsep
