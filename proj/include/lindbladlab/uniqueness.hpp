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

/// Joint commutant {X : [G_i, X] = 0 for all i} of a finite operator list.
/// Adjoints of non-hermitian generators are appended automatically, so the
/// result is always a *-algebra; it always contains the identity.
struct CommutantResult {
  Index dimension = 0;
  std::vector<ComplexMatrix> basis;       // orthonormal (Hilbert-Schmidt)
  std::vector<ComplexMatrix> generators;  // the list actually used
};
CommutantResult commutant(const std::vector<ComplexMatrix>& generators,
                          double tol = defaults::rank_tol);

enum class UniquenessVerdict { Unique, NotUnique, Inapplicable };

/// Commutant criterion: with a positive-definite stationary state, the
/// stationary state is unique iff the operators {H + K} and all jumps have a
/// trivial joint commutant. Reports Inapplicable when the maximal-support
/// stationary state is not positive definite.
struct FrigerioReport {
  UniquenessVerdict verdict = UniquenessVerdict::Inapplicable;
  Index commutant_dimension = 0;
  double min_steady_eigenvalue = 0.0;
  bool has_witness = false;
  ComplexMatrix witness;  // non-identity commutant element, unit Frobenius norm
};
FrigerioReport frigerio_uniqueness(const Liouvillian& liou);

/// Traceless hermitian solutions X_B of [h, I_A (x) X_B] = 0, returned as a
/// Frobenius-orthonormal list. Empty means only multiples of the identity
/// commute through the boundary.
std::vector<ComplexMatrix> bulk_commutant_solver(const ComplexMatrix& h, const CompositeDims& dims,
                                                 double tol = defaults::rank_tol);

enum class BulkUniquenessVerdict { UniquePositiveDefinite, NotUnique, Inapplicable };

/// Bulk-commutant criterion for boundary-driven systems: with an ergodic
/// boundary dissipator whose target is positive definite, the stationary
/// state is unique and positive definite iff no traceless hermitian bulk
/// operator commutes with the Hamiltonian through the boundary. A witness
/// X_B, when present, also commutes with h_b and, lifted, with h_ab.
struct BulkUniquenessReport {
  BulkUniquenessVerdict verdict = BulkUniquenessVerdict::Inapplicable;
  Index bulk_commutant_dimension = 0;
  bool has_witness = false;
  ComplexMatrix witness;
  double witness_bulk_residual = 0.0;         // ||[h_b, X_B]||_F
  double witness_interaction_residual = 0.0;  // ||[h_ab, I (x) X_B]||_F
};
BulkUniquenessReport bulk_uniqueness_verdict(const HamiltonianDecomposition& hdec,
                                             const JumpSet& local);

enum class ClosureVerdict { UniqueSufficient, Inconclusive };

/// Multiplicative-closure sufficient condition: if linear combinations of
/// products of {H + K - (i/2) sum L^dagger L} and the jumps (with the
/// identity) exhaust the full operator space, the stationary state is unique.
/// The criterion is one-sided; failure to exhaust the space proves nothing.
struct ClosureReport {
  ClosureVerdict verdict = ClosureVerdict::Inconclusive;
  Index closure_dimension = 0;
  Index rounds = 0;
};
ClosureReport yoshida_check(const Liouvillian& liou);

/// Decomposition of the asymptotic algebra ker(L^dagger) into minimal blocks:
/// center projections P_j (orthogonal, summing to the support projector) and
/// one stationary block state per projection. When the maximal-support
/// stationary state is not faithful the analysis restricts to its support
/// first and transient_part is set.
struct ErgodicDecomposition {
  Index nullspace_dim = 0;
  bool is_algebra = false;
  bool transient_part = false;
  ComplexMatrix support_projector;  // identity when the stationary state is faithful
  std::vector<ComplexMatrix> center_projections;
  std::vector<ComplexMatrix> block_states;
};
ErgodicDecomposition ergodic_decomposition(const Liouvillian& liou, std::uint64_t seed = 0);

}  // namespace lindbladlab
