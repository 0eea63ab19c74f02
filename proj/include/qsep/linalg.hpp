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

// Small dense complex linear algebra: just enough for 2x2 minors,
// determinants, Hermitian spectra and purities of desk-scale matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsep/errors.hpp"

namespace qsep {

using complex = std::complex<double>;

/// Default relative tolerance for vanishing 2x2 minors and constraint
/// residuals.
inline constexpr double kDefaultMinorTol = 1e-10;

/// Counts complex multiplications performed by the minor kernels.
struct OpCounter {
  std::size_t multiplications = 0;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw shape_error("matrix dimensions must be positive");
    if (data_.size() != rows * cols) {
      throw shape_error("matrix entry count " + std::to_string(data_.size()) +
                        " does not match " + std::to_string(rows) + "x" +
                        std::to_string(cols));
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw shape_error("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw shape_error("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const complex> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const complex> entries() const noexcept { return data_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

inline ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw shape_error("matrix product: inner dimensions " + std::to_string(a.cols()) +
                      " and " + std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline complex trace(const ComplexMatrix& m) {
  if (!m.square()) throw shape_error("trace of a non-square matrix");
  complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s = std::max(s, std::abs(z));
  return s;
}

/// True when every |m_ij - conj(m_ji)| <= tol * max(1, max|m_ij|).
inline bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10) {
  if (!m.square()) return false;
  const double bound = tol * std::max(1.0, max_abs(m));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > bound) return false;
  return true;
}

/// Scale-aware zero test shared by the minor and constraint criteria:
/// |value| <= tol * max(1, scale).
inline bool negligible(complex value, double scale, double tol) {
  return std::abs(value) <= tol * std::max(1.0, scale);
}

/// Determinant of rows {r1, r2} x cols {c1, c2}: a_{r1c1} a_{r2c2} - a_{r1c2} a_{r2c1}.
inline complex minor2(const ComplexMatrix& m, std::size_t r1, std::size_t r2, std::size_t c1,
                      std::size_t c2, OpCounter* counter = nullptr) {
  if (!(r1 < r2 && r2 < m.rows() && c1 < c2 && c2 < m.cols())) {
    throw invalid_index_error("minor2: need r1 < r2 < rows and c1 < c2 < cols");
  }
  if (counter) counter->multiplications += 2;
  return m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
}

/// |a_{r1c1} a_{r2c2}| + |a_{r1c2} a_{r2c1}|, the magnitude scale of minor2.
inline double minor2_scale(const ComplexMatrix& m, std::size_t r1, std::size_t r2,
                           std::size_t c1, std::size_t c2) {
  return std::abs(m(r1, c1)) * std::abs(m(r2, c2)) + std::abs(m(r1, c2)) * std::abs(m(r2, c1));
}

/// Location and value of one 2x2 minor.
struct MinorEntry {
  std::size_t r1, r2, c1, c2;
  complex value;
  double scale;
};

/// Visits every 2x2 minor in (r1, r2, c1, c2) lexicographic order. The
/// visitor returns false to stop the scan early. Returns true iff the scan
/// ran to completion.
template <typename Visitor>
  requires std::is_invocable_r_v<bool, Visitor, const MinorEntry&>
bool scan_minors(const ComplexMatrix& m, Visitor&& visit, OpCounter* counter = nullptr) {
  for (std::size_t r1 = 0; r1 < m.rows(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 < m.rows(); ++r2)
      for (std::size_t c1 = 0; c1 < m.cols(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < m.cols(); ++c2) {
          const complex value = minor2(m, r1, r2, c1, c2, counter);
          if (!visit(MinorEntry{r1, r2, c1, c2, value, minor2_scale(m, r1, r2, c1, c2)}))
            return false;
        }
  return true;
}

inline constexpr std::size_t kMaxDenseOrder = 64;

/// Determinant by LU with partial pivoting.
inline complex det(const ComplexMatrix& m) {
  if (!m.square()) throw shape_error("det: matrix is not square");
  if (m.rows() > kMaxDenseOrder) throw size_cap_error("det: order above 64");
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  complex result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    if (a(pivot, k) == complex{}) return complex{};
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const complex f = a(i, k) / a(k, k);
      if (f == complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

namespace detail {

// Cyclic Jacobi on a real symmetric matrix stored row-major. Only the
// eigenvalues are kept.
inline std::vector<double> symmetric_jacobi(std::vector<double> s, std::size_t n,
                                            double rel_tol) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return s[i * n + j]; };
  double total = 0.0;
  for (double v : s) total += v * v;
  const double target = rel_tol * std::sqrt(total);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= target) break;

    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - sn * akq;
          at(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - sn * aqk;
          at(q, k) = sn * apk + c * aqk;
        }
      }
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  return diag;
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, sorted descending.
///
/// H = A + iB is embedded as the real symmetric [[A, -B], [B, A]], whose
/// spectrum is that of H with every eigenvalue doubled; cyclic Jacobi
/// sweeps then run on the real matrix until the off-diagonal norm drops
/// below 1e-12 of the total.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.square()) throw shape_error("hermitian_eigenvalues: matrix is not square");
  if (m.rows() > kMaxDenseOrder) throw size_cap_error("hermitian_eigenvalues: order above 64");
  if (!is_hermitian(m)) throw shape_error("hermitian_eigenvalues: matrix is not Hermitian");

  const std::size_t n = m.rows();
  const std::size_t n2 = 2 * n;
  std::vector<double> s(n2 * n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize so round-off in the input cannot leak asymmetry.
      const complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      s[i * n2 + j] = h.real();
      s[(i + n) * n2 + (j + n)] = h.real();
      s[i * n2 + (j + n)] = -h.imag();
      s[(i + n) * n2 + j] = h.imag();
    }
  std::vector<double> doubled = detail::symmetric_jacobi(std::move(s), n2, 1e-13);
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

/// Re tr(rho^2) of a Hermitian density matrix.
inline double purity(const ComplexMatrix& rho) {
  if (!is_hermitian(rho)) throw shape_error("purity: matrix is not Hermitian");
  complex acc{};
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) acc += rho(i, j) * rho(j, i);
  return acc.real();
}

}  // namespace qsep
