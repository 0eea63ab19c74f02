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

// Digit-string combinatorics behind the amplitude-pair criterion: the
// per-site pair condition, its sum/XOR form for bit strings, and the
// canonical enumeration of constraint quadruples.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsep/errors.hpp"
#include "qsep/state.hpp"

namespace qsep {

/// {i_t, j_t} == {k_t, l_t} as multisets at every site t.
inline bool pair_condition(const MultiIndex& i, const MultiIndex& j, const MultiIndex& k,
                           const MultiIndex& l) {
  const std::size_t n = i.size();
  if (j.size() != n || k.size() != n || l.size() != n) {
    throw shape_error("pair_condition: indices have different lengths");
  }
  for (std::size_t t = 0; t < n; ++t) {
    const std::pair<std::size_t, std::size_t> lhs = std::minmax(i[t], j[t]);
    const std::pair<std::size_t, std::size_t> rhs = std::minmax(k[t], l[t]);
    if (lhs != rhs) return false;
  }
  return true;
}

/// i + j == k + l and i ^ j == k ^ l for n-bit strings.
inline bool sum_xor_condition(std::uint64_t i, std::uint64_t j, std::uint64_t k, std::uint64_t l,
                              unsigned n) {
  if (n == 0 || n > 62) throw shape_error("sum_xor_condition: bit width must be in 1..62");
  const std::uint64_t bound = std::uint64_t{1} << n;
  if (i >= bound || j >= bound || k >= bound || l >= bound) {
    throw invalid_index_error("sum_xor_condition: offset is not an " + std::to_string(n) +
                              "-bit string");
  }
  return i + j == k + l && (i ^ j) == (k ^ l);
}

/// A constraint a_i a_j = a_k a_l, by flat offsets. Canonical form has
/// i <= j, k <= l and (i, j) < (k, l).
struct ConstraintQuad {
  std::size_t i, j, k, l;

  bool is_canonical() const noexcept {
    return i <= j && k <= l && std::pair(i, j) < std::pair(k, l);
  }

  auto operator<=>(const ConstraintQuad&) const = default;
};

/// Sorts each pair and orders the two pairs. Identity quads (the same pair
/// twice) come back non-canonical.
inline ConstraintQuad canonicalize(ConstraintQuad q) {
  if (q.i > q.j) std::swap(q.i, q.j);
  if (q.k > q.l) std::swap(q.k, q.l);
  if (std::pair(q.k, q.l) < std::pair(q.i, q.j)) {
    std::swap(q.i, q.k);
    std::swap(q.j, q.l);
  }
  return q;
}

/// Calls visit(quad) for every canonical constraint quad over `dims`, in
/// order of (i, j) ascending and then the swapped-site subset ascending
/// (a bitmask over the mixed sites after the first, most significant party
/// first). The visitor may return false to stop. Returns true iff the
/// enumeration completed.
template <typename Visitor>
bool for_each_constraint(const Dims& dims, Visitor&& visit) {
  validate_dims(dims);
  check_size_cap(dims);
  const std::size_t n = dims.size();
  const std::size_t size = total_size(dims);

  std::vector<std::size_t> stride(n);
  {
    std::size_t s = 1;
    for (std::size_t t = n; t-- > 0;) {
      stride[t] = s;
      s *= dims[t];
    }
  }
  std::vector<std::size_t> digits(size * n);
  for (std::size_t off = 0; off < size; ++off) {
    const MultiIndex idx = decode(off, dims);
    for (std::size_t t = 0; t < n; ++t) digits[off * n + t] = idx[t];
  }

  std::vector<std::size_t> mixed;
  mixed.reserve(n);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t* di = &digits[i * n];
    for (std::size_t j = i + 1; j < size; ++j) {
      const std::size_t* dj = &digits[j * n];
      mixed.clear();
      for (std::size_t t = 0; t < n; ++t)
        if (di[t] != dj[t]) mixed.push_back(t);
      if (mixed.size() < 2) continue;
      // The first mixed site keeps i's digit in k, so each unordered
      // partner pair arises from exactly one mask.
      const std::size_t free_sites = mixed.size() - 1;
      const std::uint64_t masks = std::uint64_t{1} << free_sites;
      for (std::uint64_t mask = 1; mask < masks; ++mask) {
        std::size_t k = i;
        for (std::size_t b = 0; b < free_sites; ++b) {
          if (!(mask >> (free_sites - 1 - b) & 1u)) continue;
          const std::size_t t = mixed[b + 1];
          k = k - di[t] * stride[t] + dj[t] * stride[t];
        }
        const std::size_t l = i + j - k;
        const std::size_t lo = std::min(k, l);
        const std::size_t hi = std::max(k, l);
        if (std::pair(i, j) < std::pair(lo, hi)) {
          if (!visit(ConstraintQuad{i, j, lo, hi})) return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<ConstraintQuad> enumerate_constraints(const Dims& dims) {
  std::vector<ConstraintQuad> out;
  for_each_constraint(dims, [&](const ConstraintQuad& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

inline std::size_t count_constraints(const Dims& dims) {
  std::size_t count = 0;
  for_each_constraint(dims, [&](const ConstraintQuad&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace qsep
