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

#include "lindbladlab/steady_state.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace lindbladlab {

namespace {

ComplexMatrix hermitize(const ComplexMatrix& m) { return ((m + m.adjoint()) / 2.0).eval(); }

ComplexMatrix random_density(Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace

StationaryAnalysis::StationaryAnalysis(const Liouvillian& liou, double rank_tol,
                                       std::uint64_t seed)
    : matrix_(liou.matrix), d_(liou.dim()) {
  if (matrix_.rows() != d_ * d_ || matrix_.cols() != d_ * d_)
    throw DimensionError("StationaryAnalysis: generator size does not match the dimension");
  build(rank_tol, seed);
}

StationaryAnalysis::StationaryAnalysis(const ComplexMatrix& superop, Index d, double rank_tol,
                                       std::uint64_t seed)
    : matrix_(superop), d_(d) {
  if (d < 1 || matrix_.rows() != d * d || matrix_.cols() != d * d)
    throw DimensionError("StationaryAnalysis: superoperator size does not match the dimension");
  build(rank_tol, seed);
}

void StationaryAnalysis::build(double rank_tol, std::uint64_t seed) {
  const KernelPair kp = kernel_pair(matrix_, rank_tol);
  right_ = kp.right;
  left_ = kp.left;
  if (right_.cols() == 0)
    throw NumericalError(
        "StationaryAnalysis: empty kernel; no stationary state resolved at the rank tolerance");

  // P = V (W^dagger V)^{-1} W^dagger projects onto the kernel along the range.
  // W^dagger V singular means kernel and range overlap: defective zero
  // eigenvalue, for which no spectral projector exists.
  const ComplexMatrix overlap = left_.adjoint() * right_;
  Eigen::JacobiSVD<ComplexMatrix> overlap_svd(overlap,
                                              Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double sigma_min = overlap_svd.singularValues().minCoeff();
  if (sigma_min < 1e-7)
    throw NumericalError("StationaryAnalysis: non-semisimple zero eigenvalue (overlap " +
                         std::to_string(sigma_min) + ")");
  projector_ = right_ * overlap_svd.solve(left_.adjoint());

  const double mscale = std::max(1.0, matrix_.norm());
  const double pscale = std::max(1.0, projector_.norm());
  if ((projector_ * projector_ - projector_).norm() > 1e-9 * pscale)
    throw NumericalError("StationaryAnalysis: projector is not idempotent at tolerance");
  if ((matrix_ * projector_).norm() > 1e-9 * mscale * pscale ||
      (projector_ * matrix_).norm() > 1e-9 * mscale * pscale)
    throw NumericalError("StationaryAnalysis: projector does not absorb the generator");

  // Spot checks on sampled densities: the projection of a state keeps unit
  // trace and stays positive semidefinite.
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  for (int k = 0; k < 5; ++k) {
    const ComplexMatrix probe = project(random_density(d_, rng));
    if (std::abs(probe.trace() - Complex(1.0)) > 1e-9)
      throw NumericalError("StationaryAnalysis: projector does not preserve trace");
    if (min_eigenvalue(hermitize(probe)) < -1e-8)
      throw NumericalError("StationaryAnalysis: projector does not preserve positivity");
  }

  rho_max_ = hermitize(
      project(ComplexMatrix::Identity(d_, d_) / static_cast<double>(d_)));
  min_steady_eig_ = min_eigenvalue(rho_max_);
}

ComplexMatrix StationaryAnalysis::project(const ComplexMatrix& x) const {
  return apply_superoperator(projector_, x);
}

StationaryBasis StationaryAnalysis::stationary_basis(double state_tol) const {
  StationaryBasis basis;
  basis.dimension = right_.cols();
  basis.raw_kernel = right_;

  const double mscale = std::max(1.0, matrix_.norm());
  auto accept = [&](const ComplexMatrix& cand) {
    if (!is_density(cand, state_tol)) return false;
    if ((matrix_ * vectorize(cand)).norm() > state_tol * mscale) return false;
    for (const ComplexMatrix& s : basis.states)
      if ((s - cand).norm() <= 1e-6) return false;
    return true;
  };

  if (accept(rho_max_)) basis.states.push_back(rho_max_);

  // Projected spectral pieces of a hermitian kernel basis supply further
  // positive representatives when the stationary space is degenerate.
  const std::vector<ComplexMatrix> herm = hermitian_span_basis(right_, d_);
  for (const ComplexMatrix& s : herm) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
    const Eigen::VectorXd lambda = es.eigenvalues();
    const double scale = lambda.cwiseAbs().maxCoeff();
    for (const double sign : {1.0, -1.0}) {
      ComplexMatrix part = ComplexMatrix::Zero(d_, d_);
      double weight = 0.0;
      for (Index i = 0; i < lambda.size(); ++i)
        if (sign * lambda(i) > 1e-12 * scale) {
          part += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
          weight += 1.0;
        }
      if (weight < 0.5) continue;
      const ComplexMatrix cand = hermitize(project(part / part.trace().real()));
      if (accept(cand)) basis.states.push_back(cand);
    }
  }

  if (basis.states.empty())
    throw NumericalError(
        "stationary_basis: no positive semidefinite stationary representative at tolerance");
  return basis;
}

StationaryBasis stationary_basis(const Liouvillian& liou, double tol) {
  return StationaryAnalysis(liou).stationary_basis(tol);
}

ComplexMatrix mean_ergodic_projector(const Liouvillian& liou) {
  return StationaryAnalysis(liou).projector();
}

ComplexMatrix maximal_support_state(const Liouvillian& liou) {
  return StationaryAnalysis(liou).maximal_support_state();
}

ProductFactorization product_factor_check(const ComplexMatrix& rho, const CompositeDims& dims,
                                          const ComplexMatrix& target_a, double tol) {
  check_dims(dims);
  if (rho.rows() != dims.total() || rho.cols() != dims.total())
    throw DimensionError("product_factor_check: state does not match the bipartition");
  if (target_a.rows() != dims.dim_a || target_a.cols() != dims.dim_a)
    throw DimensionError("product_factor_check: target does not match dim_a");
  if (!is_density(rho, 1e-6))
    throw ValidationError("product_factor_check: operand is not a density matrix");

  ProductFactorization out;
  out.rho_a = partial_trace(rho, dims, Subsystem::A);
  out.rho_b = partial_trace(rho, dims, Subsystem::B);
  out.residual = (rho - kron(out.rho_a, out.rho_b)).norm();
  out.product = out.residual <= tol;
  out.target_mismatch = (out.rho_a - target_a).norm();
  out.matches_target = out.target_mismatch <= tol;
  return out;
}

FactorCommutationDiagnostics factor_commutation_diagnostics(const ComplexMatrix& rho,
                                       const HamiltonianDecomposition& hdec, double tol) {
  const CompositeDims dims = hdec.dims;
  check_dims(dims);
  if (rho.rows() != dims.total() || rho.cols() != dims.total())
    throw DimensionError("factor_commutation_diagnostics: state does not match the bipartition");

  if (std::abs(rho.trace()) < 1e-12)
    throw ValidationError("factor_commutation_diagnostics: state has vanishing trace");

  FactorCommutationDiagnostics out;
  ComplexMatrix rho_a = partial_trace(rho, dims, Subsystem::A);
  ComplexMatrix rho_b = partial_trace(rho, dims, Subsystem::B);
  rho_a /= rho_a.trace();
  rho_b /= rho_b.trace();

  out.boundary_residual = (rho_a * hdec.h_a - hdec.h_a * rho_a).norm();
  out.bulk_residual = (rho_b * hdec.h_b - hdec.h_b * rho_b).norm();
  out.interaction_residual = (rho * hdec.h_ab - hdec.h_ab * rho).norm();
  out.within_tolerance = out.boundary_residual <= tol && out.bulk_residual <= tol &&
                         out.interaction_residual <= tol;

  out.min_eigenvalue = min_eigenvalue(((rho + rho.adjoint()) / 2.0).eval());
  out.positive_definite = out.min_eigenvalue > defaults::positivity_tol;
  out.commutes_with_h = (rho * hdec.h_total - hdec.h_total * rho).norm() <= 1e-10;
  out.product_form = (rho - kron(rho_a, rho_b)).norm() <= defaults::density_tol;
  out.preconditions_met = out.positive_definite && out.commutes_with_h && out.product_form;
  return out;
}

GibbsNogoReport gibbs_nogo(const HamiltonianDecomposition& hdec, const JumpSet& local, double beta,
                           double tol) {
  if (!std::isfinite(beta)) throw ValidationError("gibbs_nogo: beta must be finite");
  const ComplexMatrix rho_hat_a = ergodic_steady_state(local);  // throws if not ergodic
  const Liouvillian liou = assemble_liouvillian(hdec, lift_local(local, hdec.dims));

  ComplexMatrix gibbs = matrix_exp((-beta * hdec.h_total).eval());
  gibbs /= gibbs.trace();

  GibbsNogoReport rep;
  rep.beta = beta;
  rep.residual = (liou.matrix * vectorize(gibbs)).norm();
  rep.gibbs_stationary = rep.residual <= tol;
  rep.interaction_norm = hdec.h_ab.norm();
  rep.interaction_zero = rep.interaction_norm <= 1e-12;
  rep.boundary_marginal_mismatch =
      (partial_trace(gibbs, hdec.dims, Subsystem::A) - rho_hat_a).norm();
  return rep;
}

}  // namespace lindbladlab
