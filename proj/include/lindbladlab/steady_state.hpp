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

#include <cstdint>
#include <vector>

#include "lindbladlab/core.hpp"
#include "lindbladlab/lindblad.hpp"
#include "lindbladlab/tensor.hpp"

namespace lindbladlab {

/// Stationary space of a generator: its dimension, density-matrix
/// representatives (the maximal-support state first), and the raw kernel as
/// orthonormal vectorized columns.
struct StationaryBasis {
  Index dimension = 0;
  std::vector<ComplexMatrix> states;
  ComplexMatrix raw_kernel;
};

/// One decomposition of the generator shared by every stationary-space
/// operation: kernel, adjoint kernel, spectral (mean ergodic) projector onto
/// the stationary subspace along the decaying directions, and the
/// maximal-support stationary state obtained by projecting the maximally
/// mixed state.
///
/// The projector construction requires the zero eigenvalue to be semisimple
/// (kernel and co-kernel in general position); a defective zero eigenvalue
/// raises NumericalError.
class StationaryAnalysis {
 public:
  explicit StationaryAnalysis(const Liouvillian& liou, double rank_tol = defaults::rank_tol,
                              std::uint64_t seed = 0);

  /// Generic-superoperator entry: matrix acts on vec(X) for d x d operands.
  StationaryAnalysis(const ComplexMatrix& superop, Index d, double rank_tol = defaults::rank_tol,
                     std::uint64_t seed = 0);

  Index dim() const { return d_; }
  Index kernel_dimension() const { return right_.cols(); }
  const ComplexMatrix& kernel() const { return right_; }
  const ComplexMatrix& adjoint_kernel() const { return left_; }
  const ComplexMatrix& superoperator() const { return matrix_; }
  const ComplexMatrix& projector() const { return projector_; }
  const ComplexMatrix& maximal_support_state() const { return rho_max_; }
  double min_steady_eigenvalue() const { return min_steady_eig_; }

  ComplexMatrix project(const ComplexMatrix& x) const;

  /// Density-matrix representatives of the stationary space, the
  /// maximal-support state first. Throws NumericalError when no positive
  /// semidefinite representative survives the tolerance.
  StationaryBasis stationary_basis(double state_tol = defaults::stationarity_tol) const;

 private:
  void build(double rank_tol, std::uint64_t seed);

  ComplexMatrix matrix_;
  Index d_ = 0;
  ComplexMatrix right_;
  ComplexMatrix left_;
  ComplexMatrix projector_;
  ComplexMatrix rho_max_;
  double min_steady_eig_ = 0.0;
};

StationaryBasis stationary_basis(const Liouvillian& liou,
                                 double tol = defaults::stationarity_tol);
ComplexMatrix mean_ergodic_projector(const Liouvillian& liou);
ComplexMatrix maximal_support_state(const Liouvillian& liou);

/// Marginals of a bipartite state and how far it is from factorizing as
/// rho_a (x) rho_b; also compares the boundary marginal against a target.
struct ProductFactorization {
  ComplexMatrix rho_a;
  ComplexMatrix rho_b;
  double residual = 0.0;        // || rho - rho_a (x) rho_b ||_F
  bool product = false;
  double target_mismatch = 0.0;  // || rho_a - target ||_F
  bool matches_target = false;
};
ProductFactorization product_factor_check(const ComplexMatrix& rho, const CompositeDims& dims,
                                          const ComplexMatrix& target_a,
                                          double tol = defaults::density_tol);

/// Commutator residuals that vanish for a positive-definite product steady
/// state commuting with the Hamiltonian: [rho_a, h_a], [rho_b, h_b], and
/// [rho, h_ab]. The preconditions (positive definite, commutes with h_total,
/// product form) are diagnosed rather than enforced.
struct FactorCommutationDiagnostics {
  double boundary_residual = 0.0;
  double bulk_residual = 0.0;
  double interaction_residual = 0.0;
  bool within_tolerance = false;
  double min_eigenvalue = 0.0;
  bool positive_definite = false;
  bool commutes_with_h = false;
  bool product_form = false;
  bool preconditions_met = false;
};
FactorCommutationDiagnostics factor_commutation_diagnostics(const ComplexMatrix& rho,
                                                            const HamiltonianDecomposition& hdec,
                                                            double tol = 1e-8);

/// Stationarity test of the Gibbs state exp(-beta h_total)/Z under the
/// generator with the given boundary dissipator. Requires an ergodic boundary
/// dissipator. Reports the residual, whether the Gibbs state is stationary at
/// the tolerance, and whether the interaction term vanishes.
struct GibbsNogoReport {
  double residual = 0.0;
  bool gibbs_stationary = false;
  double interaction_norm = 0.0;
  bool interaction_zero = false;
  double boundary_marginal_mismatch = 0.0;  // || Tr_B gibbs - boundary target ||_F
  double beta = 0.0;
};
GibbsNogoReport gibbs_nogo(const HamiltonianDecomposition& hdec, const JumpSet& local, double beta,
                           double tol = defaults::projector_tol);

}  // namespace lindbladlab
