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

// Entanglement measures: the constraint variance D_E, the |det M|
// local-unitary invariant and the two-qubit Schmidt spectrum.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qsep/errors.hpp"
#include "qsep/index_arith.hpp"
#include "qsep/linalg.hpp"
#include "qsep/separability.hpp"
#include "qsep/state.hpp"

namespace qsep {

namespace detail {

inline void require_normalized(const PureState& state, std::string_view op) {
  if (std::abs(state.norm_squared() - 1.0) > kDefaultNormTol) {
    throw invalid_state_error(std::string(op) + ": state must be normalized");
  }
}

inline void require_two_qubit(const PureState& state, std::string_view op) {
  if (state.parties() != 2 || state.dims()[0] != 2 || state.dims()[1] != 2) {
    throw shape_error(std::string(op) + ": needs a two-qubit state");
  }
}

// Neumaier summation; the result depends only on the input order.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// D_E: sum over canonical constraint quads of |a_i a_j - a_k a_l|^2.
inline double d_e(const PureState& state) {
  detail::require_normalized(state, "d_e");
  detail::CompensatedSum acc;
  for_each_constraint(state.dims(), [&](const ConstraintQuad& q) {
    acc.add(std::norm(state[q.i] * state[q.j] - state[q.k] * state[q.l]));
    return true;
  });
  return acc.value();
}

inline constexpr double kTwoQubitMaxDE = 0.25;

/// Whether a two-qubit state attains the D_E maximum of 1/4 (within 1e-9).
inline bool d_e_max_two_qubit_check(const PureState& state) {
  detail::require_two_qubit(state, "d_e_max_two_qubit_check");
  const double value = d_e(state);
  if (value > kTwoQubitMaxDE + 1e-12) {
    throw std::logic_error("two-qubit D_E " + std::to_string(value) + " exceeds 1/4");
  }
  return std::abs(value - kTwoQubitMaxDE) <= 1e-9;
}

/// |det M|, invariant under U (x) V.
inline double det_invariant(const PureState& state) {
  detail::require_bipartite_square(state, "det_invariant");
  return std::abs(det(flatten(state, 2).matrix));
}

/// Schmidt data of a two-qubit state: epsilon = |ad - bc| and the marginal
/// eigenvalues lambda_pm = (1 +- sqrt(1 - 4 epsilon^2)) / 2.
struct TwoQubitSpectrum {
  double epsilon;
  double lambda_plus;
  double lambda_minus;
};

inline TwoQubitSpectrum schmidt_two_qubit(const PureState& state) {
  detail::require_two_qubit(state, "schmidt_two_qubit");
  detail::require_normalized(state, "schmidt_two_qubit");
  const double eps = std::abs(state[0] * state[3] - state[1] * state[2]);
  if (eps > 0.5 + 1e-12) {
    throw invalid_state_error("schmidt_two_qubit: |ad - bc| = " + std::to_string(eps) +
                              " exceeds 1/2, state is not normalized");
  }
  const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * eps * eps));
  return TwoQubitSpectrum{eps, 0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

inline constexpr double kDefaultEquivTol = 1e-9;

/// Two-qubit LU equivalence by equal D_E.
inline bool lu_equiv_two_qubit(const PureState& psi, const PureState& phi,
                               double tol = kDefaultEquivTol) {
  detail::require_two_qubit(psi, "lu_equiv_two_qubit");
  detail::require_two_qubit(phi, "lu_equiv_two_qubit");
  return std::abs(d_e(psi) - d_e(phi)) <= tol;
}

}  // namespace qsep
