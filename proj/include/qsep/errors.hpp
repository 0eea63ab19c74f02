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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsep {

// Digit or flat offset outside the dims it is checked against.
class invalid_index_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Party label outside 1..n.
class invalid_party_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Operand shapes that the operation does not accept (non-square, wrong
// number of parties, mismatched dims, ...).
class shape_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unnormalized state data.
class invalid_state_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Total amplitude count above the desk-scale cap.
class size_cap_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Thrown by factor() when the anchor reconstruction misses the input.
class entangled_error : public std::runtime_error {
 public:
  entangled_error(double residual, double tol)
      : std::runtime_error("state is entangled: reconstruction residual " +
                           std::to_string(residual) + " exceeds tolerance " +
                           std::to_string(tol)),
        residual_(residual),
        tol_(tol) {}

  double residual() const noexcept { return residual_; }
  double tolerance() const noexcept { return tol_; }

 private:
  double residual_;
  double tol_;
};

}  // namespace qsep
