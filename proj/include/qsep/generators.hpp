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

// Canonical and random state generators.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/linalg.hpp"
#include "qsep/state.hpp"

namespace qsep {

/// (|0...0> + |1...1>) / sqrt(2) on n qubits.
inline PureState ghz(std::size_t n) {
  if (n < 2) throw shape_error("ghz: need at least 2 qubits");
  if (n >= 8 * sizeof(std::size_t) - 1) throw size_cap_error("ghz: too many qubits");
  const std::size_t size = std::size_t{1} << n;
  std::vector<complex> amps(size);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return PureState(Dims(n, 2), std::move(amps));
}

/// Equal superposition of the n weight-one basis states |2^k>.
inline PureState w(std::size_t n) {
  if (n < 2) throw shape_error("w: need at least 2 qubits");
  if (n >= 8 * sizeof(std::size_t) - 1) throw size_cap_error("w: too many qubits");
  std::vector<complex> amps(std::size_t{1} << n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) amps[std::size_t{1} << k] = a;
  return PureState(Dims(n, 2), std::move(amps));
}

namespace detail {

inline std::vector<complex> gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<complex> v(n);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = complex(re, im);
  }
  return v;
}

inline void normalize(std::vector<complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& z : v) z *= inv;
}

}  // namespace detail

/// A product state together with the local vectors it was built from.
struct ProductSample {
  PureState state;
  std::vector<std::vector<complex>> locals;
};

inline ProductSample random_product_sample(const Dims& dims, std::uint64_t seed) {
  validate_dims(dims);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<complex>> locals;
  locals.reserve(dims.size());
  for (std::size_t d : dims) {
    auto v = detail::gaussian_vector(d, rng);
    detail::normalize(v);
    locals.push_back(std::move(v));
  }
  auto amps = kron(locals);
  return ProductSample{PureState(dims, std::move(amps)), std::move(locals)};
}

inline PureState random_product_state(const Dims& dims, std::uint64_t seed) {
  return random_product_sample(dims, seed).state;
}

/// Complex-Gaussian amplitudes, normalized.
inline PureState random_state(const Dims& dims, std::uint64_t seed) {
  validate_dims(dims);
  std::mt19937_64 rng(seed);
  auto amps = detail::gaussian_vector(total_size(dims), rng);
  detail::normalize(amps);
  return PureState(dims, std::move(amps));
}

/// Haar-random n x n unitary: modified Gram-Schmidt on the columns of a
/// complex Ginibre matrix. Gram-Schmidt leaves R with a positive real
/// diagonal, which is the phase convention that makes Q Haar distributed.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw shape_error("random_unitary: order must be positive");
  auto g = detail::gaussian_vector(n * n, rng);
  ComplexMatrix q(n, n, std::move(g));
  for (std::size_t j = 0; j < n; ++j) {
    // Two projection passes keep the columns orthogonal to round-off.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(q(i, j));
    const double inv = 1.0 / std::sqrt(s);
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= inv;
  }
  return q;
}

inline ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_unitary(n, rng);
}

}  // namespace qsep
