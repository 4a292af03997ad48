// Copyright 2026 The lindbladlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace lindbladlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Eigen::Index;

/// Bad user-supplied data: shapes, parameter ranges, config fields.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes do not match.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A numerical routine could not meet its contract at the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bipartition of a Hilbert space into a boundary factor A and a bulk factor B.
/// dim_b == 1 describes a system without a bulk part (single-subsystem work).
struct CompositeDims {
  Index dim_a = 0;
  Index dim_b = 0;

  Index total() const { return dim_a * dim_b; }
};

namespace defaults {
inline constexpr double hermitian_tol = 1e-12;
inline constexpr double rank_tol = 1e-10;         // relative singular-value cut
inline constexpr double stationarity_tol = 1e-8;  // Frobenius, on trace-one states
inline constexpr double density_tol = 1e-8;
inline constexpr double projector_tol = 1e-9;
inline constexpr double commutant_tol = 1e-9;
inline constexpr double cptp_tol = 1e-9;
inline constexpr double positivity_tol = 1e-10;  // strict-positivity gate
inline constexpr Index dim_cap = 64;             // total Hilbert-space dimension
}  // namespace defaults

/// Total-dimension cap for dense solves. The environment variable
/// LINDBLADLAB_DIM_CAP overrides the built-in default of 64 (read once).
inline Index dimension_cap() {
  static const Index cap = [] {
    if (const char* env = std::getenv("LINDBLADLAB_DIM_CAP")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 2) return static_cast<Index>(v);
    }
    return defaults::dim_cap;
  }();
  return cap;
}

inline void check_dims(const CompositeDims& dims) {
  if (dims.dim_a < 1 || dims.dim_b < 1)
    throw ValidationError("CompositeDims: dimensions must be positive, got (" +
                          std::to_string(dims.dim_a) + ", " + std::to_string(dims.dim_b) + ")");
  if (dims.total() > dimension_cap())
    throw ValidationError("total dimension " + std::to_string(dims.total()) +
                          " exceeds the configured cap " + std::to_string(dimension_cap()));
}

}  // namespace lindbladlab
