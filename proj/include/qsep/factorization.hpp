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

// Constructive factorization of product states.
//
// Anchor rule: take the largest-magnitude amplitude a_m (lowest offset on
// ties). The local vector of party t is the slice a_{m_1..m_{t-1}, c,
// m_{t+1}..m_n} over c, normalized; the global phase makes the
// reconstructed anchor amplitude agree with a_m. On a product state each
// slice is proportional to the true local vector, so the reconstruction is
// exact up to round-off.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/linalg.hpp"
#include "qsep/separability.hpp"
#include "qsep/state.hpp"

namespace qsep {

inline constexpr double kDefaultFactorTol = 1e-8;

struct Factorization {
  std::vector<std::vector<complex>> locals;  // unit-norm, one per party
  complex global_phase{1.0, 0.0};
  double residual = 0.0;
};

/// ||state - phase * (x^(1) (x) ... (x) x^(n))||_2
inline double verify_reconstruction(const PureState& state, const Factorization& fact) {
  if (fact.locals.size() != state.parties()) throw shape_error("factorization party count mismatch");
  for (std::size_t t = 0; t < state.parties(); ++t)
    if (fact.locals[t].size() != state.dims()[t])
      throw shape_error("factorization local dimension mismatch at party " + std::to_string(t + 1));
  const auto product = kron(fact.locals);
  double s = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i)
    s += std::norm(state[i] - fact.global_phase * product[i]);
  return std::sqrt(s);
}

inline std::size_t anchor_offset(const PureState& state) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double a = std::abs(state[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

/// Anchor reconstruction of any state; `residual` says how far it misses.
inline Factorization anchor_factorization(const PureState& state) {
  const auto& dims = state.dims();
  const std::size_t m = anchor_offset(state);
  const MultiIndex anchor = decode(m, dims);

  Factorization f;
  f.locals.reserve(dims.size());
  std::size_t stride = state.size();
  for (std::size_t t = 0; t < dims.size(); ++t) {
    stride /= dims[t];
    const std::size_t base = m - anchor[t] * stride;
    std::vector<complex> local(dims[t]);
    double s = 0.0;
    for (std::size_t c = 0; c < dims[t]; ++c) {
      local[c] = state[base + c * stride];
      s += std::norm(local[c]);
    }
    const double inv = 1.0 / std::sqrt(s);
    for (auto& z : local) z *= inv;
    f.locals.push_back(std::move(local));
  }

  complex rebuilt = 1.0;
  for (std::size_t t = 0; t < dims.size(); ++t) rebuilt *= f.locals[t][anchor[t]];
  const complex ratio = state[m] / rebuilt;
  f.global_phase = ratio / std::abs(ratio);
  f.residual = verify_reconstruction(state, f);
  return f;
}

/// Factorizes a normalized product state; throws entangled_error when the
/// reconstruction residual exceeds `tol`.
inline Factorization factor(const PureState& state, double tol = kDefaultFactorTol) {
  if (std::abs(state.norm_squared() - 1.0) > kDefaultNormTol) {
    throw invalid_state_error("factor: state must be normalized");
  }
  Factorization f = anchor_factorization(state);
  if (f.residual > tol) throw entangled_error(f.residual, tol);
  return f;
}

/// On a separable 3-qubit state: a3 a5 a6 == a0 a7^2 and a1 a7 a6 == a0 a7^2.
inline bool three_qubit_product_identity_check(const PureState& state, double tol = 1e-12) {
  if (state.dims() != Dims{2, 2, 2}) {
    throw shape_error("three_qubit_product_identity_check: needs 3 qubits");
  }
  if (!is_separable_minors(state).separable) {
    throw invalid_state_error("three_qubit_product_identity_check: state is not separable");
  }
  const complex rhs = state[0] * state[7] * state[7];
  return std::abs(state[3] * state[5] * state[6] - rhs) <= tol &&
         std::abs(state[1] * state[7] * state[6] - rhs) <= tol;
}

}  // namespace qsep
