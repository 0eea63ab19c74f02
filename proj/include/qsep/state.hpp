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

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/linalg.hpp"

namespace qsep {

/// Per-party local dimensions d_1..d_n.
using Dims = std::vector<std::size_t>;

/// Largest total amplitude count the enumerating criteria accept.
inline constexpr std::size_t kMaxAmplitudes = 4096;

inline constexpr double kDefaultNormTol = 1e-9;

inline void validate_dims(std::span<const std::size_t> dims) {
  if (dims.empty()) throw shape_error("dims must name at least one party");
  for (std::size_t d : dims)
    if (d < 2) throw shape_error("every party dimension must be at least 2");
}

inline std::size_t total_size(std::span<const std::size_t> dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

inline void check_size_cap(std::span<const std::size_t> dims) {
  if (total_size(dims) > kMaxAmplitudes) {
    throw size_cap_error("amplitude count " + std::to_string(total_size(dims)) +
                         " exceeds the cap of " + std::to_string(kMaxAmplitudes));
  }
}

/// Party-local digits (i_1, ..., i_n) of one basis vector.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::size_t> digits) : digits_(std::move(digits)) {}
  MultiIndex(std::initializer_list<std::size_t> digits) : digits_(digits) {}

  std::size_t size() const noexcept { return digits_.size(); }
  std::size_t operator[](std::size_t t) const noexcept { return digits_[t]; }
  std::size_t& operator[](std::size_t t) noexcept { return digits_[t]; }
  std::span<const std::size_t> digits() const noexcept { return digits_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::size_t> digits_;
};

/// Big-endian mixed-radix offset; party 1 is the most significant digit.
inline std::size_t encode(const MultiIndex& idx, std::span<const std::size_t> dims) {
  if (idx.size() != dims.size()) {
    throw invalid_index_error("index has " + std::to_string(idx.size()) + " digits, dims has " +
                              std::to_string(dims.size()) + " parties");
  }
  std::size_t offset = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (idx[t] >= dims[t]) {
      throw invalid_index_error("digit " + std::to_string(idx[t]) + " at party " +
                                std::to_string(t + 1) + " is not below " +
                                std::to_string(dims[t]));
    }
    offset = offset * dims[t] + idx[t];
  }
  return offset;
}

inline MultiIndex decode(std::size_t offset, std::span<const std::size_t> dims) {
  if (offset >= total_size(dims)) {
    throw invalid_index_error("offset " + std::to_string(offset) + " is out of range");
  }
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    digits[t] = offset % dims[t];
    offset /= dims[t];
  }
  return MultiIndex(std::move(digits));
}

enum class Normalization { validate, allow_unnormalized };

/// Amplitude tensor of an n-party pure state, stored by flat offset.
class PureState {
 public:
  PureState(Dims dims, std::vector<complex> amplitudes,
            Normalization policy = Normalization::validate, double norm_tol = kDefaultNormTol)
      : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    validate_dims(dims_);
    if (amplitudes_.size() != total_size(dims_)) {
      throw invalid_state_error("expected " + std::to_string(total_size(dims_)) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    for (const auto& a : amplitudes_)
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw invalid_state_error("amplitudes must be finite");
    const double n2 = norm_squared();
    if (n2 == 0.0) throw invalid_state_error("state has zero norm");
    if (policy == Normalization::validate && std::abs(n2 - 1.0) > norm_tol) {
      throw invalid_state_error("state is not normalized: sum |a|^2 = " + std::to_string(n2));
    }
  }

  const Dims& dims() const noexcept { return dims_; }
  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const complex> amplitudes() const noexcept { return amplitudes_; }

  const complex& operator[](std::size_t offset) const noexcept { return amplitudes_[offset]; }
  const complex& at(const MultiIndex& idx) const { return amplitudes_[encode(idx, dims_)]; }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
  }

 private:
  Dims dims_;
  std::vector<complex> amplitudes_;
};

inline void check_party(const PureState& state, std::size_t party) {
  if (party < 1 || party > state.parties()) {
    throw invalid_party_error("party " + std::to_string(party) + " is not in 1.." +
                              std::to_string(state.parties()));
  }
}

/// The matrix M_t: column = digit of party t, row = remaining digits in
/// party order, big-endian.
struct Flattening {
  std::size_t party;  // 1-based
  ComplexMatrix matrix;

  std::size_t rows() const noexcept { return matrix.rows(); }
  std::size_t cols() const noexcept { return matrix.cols(); }
};

inline Flattening flatten(const PureState& state, std::size_t party) {
  check_party(state, party);
  const auto& dims = state.dims();
  const std::size_t t = party - 1;
  const std::size_t cols = dims[t];
  // Digits after t form the low part of the row index, digits before t the
  // high part; stride of party t in the flat offset is the product of the
  // dims after it.
  std::size_t inner = 1;
  for (std::size_t s = t + 1; s < dims.size(); ++s) inner *= dims[s];
  const std::size_t rows = state.size() / cols;
  ComplexMatrix m(rows, cols);
  for (std::size_t offset = 0; offset < state.size(); ++offset) {
    const std::size_t low = offset % inner;
    const std::size_t c = (offset / inner) % cols;
    const std::size_t high = offset / (inner * cols);
    m(high * inner + low, c) = state[offset];
  }
  return Flattening{party, std::move(m)};
}

/// Reduced operator on the parties other than `traced_party`: M_t M_t^+.
inline ComplexMatrix reduced_density(const PureState& state, std::size_t traced_party) {
  const auto f = flatten(state, traced_party);
  return f.matrix * adjoint(f.matrix);
}

/// Single-party marginal rho^(t) with entries sum_r a_{rc} conj(a_{rc'}).
inline ComplexMatrix party_marginal(const PureState& state, std::size_t party) {
  const auto f = flatten(state, party);
  const auto& m = f.matrix;
  ComplexMatrix rho(m.cols(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const complex arc = m(r, c);
      if (arc == complex{}) continue;
      for (std::size_t c2 = 0; c2 < m.cols(); ++c2) rho(c, c2) += arc * std::conj(m(r, c2));
    }
  return rho;
}

/// Applies a d_t x d_t operator to party t.
inline PureState apply_local(const PureState& state, std::size_t party, const ComplexMatrix& op,
                             Normalization policy = Normalization::validate) {
  check_party(state, party);
  const auto& dims = state.dims();
  const std::size_t t = party - 1;
  if (op.rows() != dims[t] || op.cols() != dims[t]) {
    throw shape_error("local operator does not match party " + std::to_string(party));
  }
  std::size_t inner = 1;
  for (std::size_t s = t + 1; s < dims.size(); ++s) inner *= dims[s];
  const std::size_t d = dims[t];
  std::vector<complex> out(state.size());
  for (std::size_t offset = 0; offset < state.size(); ++offset) {
    const std::size_t c = (offset / inner) % d;
    const std::size_t base = offset - c * inner;
    for (std::size_t k = 0; k < d; ++k) out[base + k * inner] += op(k, c) * state[offset];
  }
  return PureState(dims, std::move(out), policy);
}

/// Tensor product of local vectors, party 1 first.
inline std::vector<complex> kron(std::span<const std::vector<complex>> locals) {
  std::vector<complex> out{1.0};
  for (const auto& v : locals) {
    std::vector<complex> next;
    next.reserve(out.size() * v.size());
    for (const auto& a : out)
      for (const auto& b : v) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

}  // namespace qsep
