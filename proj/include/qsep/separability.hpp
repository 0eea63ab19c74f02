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

// Full-separability deciders for pure states.
//
//   is_separable_minors  every 2x2 minor of every flattening M_t vanishes
//   is_separable_pairs   a_i a_j == a_k a_l over all canonical constraint quads
//   oracle_separable     every single-party marginal is pure
//
// The first two are the criteria under study; the oracle is the independent
// reduced-density check they are validated against.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/index_arith.hpp"
#include "qsep/linalg.hpp"
#include "qsep/state.hpp"

namespace qsep {

enum class Method { minors, pairs, oracle };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::minors: return "minors";
    case Method::pairs: return "pairs";
    case Method::oracle: return "oracle";
  }
  return "?";
}

struct MinorWitness {
  std::size_t party;  // 1-based flattening label
  std::size_t r1, r2, c1, c2;
  complex value;
  double scale;
};

struct QuadWitness {
  ConstraintQuad quad;
  complex residual;  // a_i a_j - a_k a_l
  double scale;      // |a_i a_j| + |a_k a_l|
};

struct PurityWitness {
  std::size_t party;  // 1-based
  double purity;
};

using Witness = std::variant<std::monostate, MinorWitness, QuadWitness, PurityWitness>;

struct Verdict {
  bool separable = true;
  Method method = Method::minors;
  Witness witness;  // monostate iff separable
  double tolerance = kDefaultMinorTol;
};

namespace detail {

// The criteria are scale invariant; run them on unit-norm amplitudes so the
// scale-aware zero test behaves the same for states admitted unnormalized.
inline PureState unit_norm(const PureState& state) {
  const double n2 = state.norm_squared();
  if (n2 == 1.0) return state;
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (auto& a : amps) a *= inv;
  return PureState(state.dims(), std::move(amps), Normalization::allow_unnormalized);
}

inline std::optional<MinorWitness> first_vanishing_violation(const Flattening& f, double tol,
                                                             OpCounter* counter) {
  std::optional<MinorWitness> found;
  scan_minors(
      f.matrix,
      [&](const MinorEntry& e) {
        if (negligible(e.value, e.scale, tol)) return true;
        found = MinorWitness{f.party, e.r1, e.r2, e.c1, e.c2, e.value, e.scale};
        return false;
      },
      counter);
  return found;
}

inline void require_bipartite_square(const PureState& state, std::string_view op) {
  if (state.parties() != 2 || state.dims()[0] != state.dims()[1]) {
    throw shape_error(std::string(op) + ": needs a bipartite state with equal dimensions");
  }
}

}  // namespace detail

/// Version 1: separable iff every 2x2 minor of M_1, ..., M_n is negligible.
/// Scans parties ascending, then (r1, r2, c1, c2) lexicographically, and
/// reports the first violation.
inline Verdict is_separable_minors(const PureState& state, double tol = kDefaultMinorTol,
                                   OpCounter* counter = nullptr) {
  check_size_cap(state.dims());
  const PureState unit = detail::unit_norm(state);
  for (std::size_t t = 1; t <= unit.parties(); ++t) {
    if (auto w = detail::first_vanishing_violation(flatten(unit, t), tol, counter)) {
      return Verdict{false, Method::minors, *w, tol};
    }
  }
  return Verdict{true, Method::minors, std::monostate{}, tol};
}

/// Bipartite criterion on the amplitude matrix M = (a_ij), rows indexed by
/// party 1. Always evaluates every minor, n^2 (n-1)^2 / 4 of them for an
/// n x n matrix, and reports the first violation in scan order.
inline Verdict is_separable_bipartite(const PureState& state, double tol = kDefaultMinorTol,
                                      OpCounter* counter = nullptr) {
  if (state.parties() != 2) throw shape_error("is_separable_bipartite: needs 2 parties");
  check_size_cap(state.dims());
  const PureState unit = detail::unit_norm(state);
  const Flattening m = flatten(unit, 2);
  Verdict v{true, Method::minors, std::monostate{}, tol};
  scan_minors(
      m.matrix,
      [&](const MinorEntry& e) {
        if (v.separable && !negligible(e.value, e.scale, tol)) {
          v.separable = false;
          v.witness = MinorWitness{2, e.r1, e.r2, e.c1, e.c2, e.value, e.scale};
        }
        return true;
      },
      counter);
  return v;
}

/// Version 2/3: separable iff |a_i a_j - a_k a_l| is negligible for every
/// canonical constraint quad. Reports the first violation in enumeration
/// order.
inline Verdict is_separable_pairs(const PureState& state, double tol = kDefaultMinorTol) {
  check_size_cap(state.dims());
  const PureState unit = detail::unit_norm(state);
  Verdict v{true, Method::pairs, std::monostate{}, tol};
  for_each_constraint(unit.dims(), [&](const ConstraintQuad& q) {
    const complex lhs = unit[q.i] * unit[q.j];
    const complex rhs = unit[q.k] * unit[q.l];
    const double scale = std::abs(lhs) + std::abs(rhs);
    const complex residual = lhs - rhs;
    if (negligible(residual, scale, tol)) return true;
    v.separable = false;
    v.witness = QuadWitness{q, residual, scale};
    return false;
  });
  return v;
}

/// Necessary condition only: false proves entanglement, true proves nothing.
inline bool det_necessary(const PureState& state, double tol = kDefaultMinorTol) {
  detail::require_bipartite_square(state, "det_necessary");
  const PureState unit = detail::unit_norm(state);
  const ComplexMatrix& m = flatten(unit, 2).matrix;
  // Hadamard's bound on |det M|.
  double bound = 1.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += std::norm(m(r, c));
    bound *= std::sqrt(s);
  }
  return negligible(det(m), bound, tol);
}

/// Reference decider: a pure state is a full product iff each single-party
/// marginal has unit purity.
inline Verdict oracle_separable(const PureState& state, double tol = kDefaultMinorTol) {
  check_size_cap(state.dims());
  const PureState unit = detail::unit_norm(state);
  for (std::size_t t = 1; t <= unit.parties(); ++t) {
    const double p = purity(party_marginal(unit, t));
    if (p < 1.0 - tol) return Verdict{false, Method::oracle, PurityWitness{t, p}, tol};
  }
  return Verdict{true, Method::oracle, std::monostate{}, tol};
}

inline Verdict decide(const PureState& state, Method method, double tol = kDefaultMinorTol) {
  switch (method) {
    case Method::minors: return is_separable_minors(state, tol);
    case Method::pairs: return is_separable_pairs(state, tol);
    case Method::oracle: return oracle_separable(state, tol);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace qsep
