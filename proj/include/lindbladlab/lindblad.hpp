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

#include <vector>

#include "lindbladlab/core.hpp"
#include "lindbladlab/tensor.hpp"

namespace lindbladlab {

/// Split of a bipartite Hamiltonian h_total = h_a (x) I + h_ab + I (x) h_b.
/// Both partial traces of h_ab vanish and h_b is traceless; the scalar part
/// of the Hamiltonian lives entirely in h_a.
struct HamiltonianDecomposition {
  ComplexMatrix h_total;  // on the composite space
  ComplexMatrix h_a;      // dim_a x dim_a
  ComplexMatrix h_b;      // dim_b x dim_b, traceless
  ComplexMatrix h_ab;     // on the composite space, partial-traceless both ways
  CompositeDims dims;
};

/// Dissipative data of a generator: a hermitian shift that enters the unitary
/// part alongside the Hamiltonian, plus the jump operators.
struct JumpSet {
  ComplexMatrix lamb_shift;          // hermitian, may be zero
  std::vector<ComplexMatrix> jumps;  // same square size as lamb_shift

  Index dim() const { return lamb_shift.rows(); }
};

/// Dense generator in the vec convention: column-stacking, so the matrix acts
/// on vec(rho) and d(vec rho)/dt = matrix * vec(rho). Keeps the pieces it was
/// assembled from so downstream analyses can reach the Hamiltonian and jumps.
struct Liouvillian {
  ComplexMatrix matrix;  // d^2 x d^2
  CompositeDims dims;
  HamiltonianDecomposition hamiltonian;
  JumpSet jumps;

  Index dim() const { return dims.total(); }
};

/// Construct an all-zero jump set on a d-dimensional space.
JumpSet empty_jump_set(Index d);

HamiltonianDecomposition decompose_hamiltonian(const ComplexMatrix& h, const CompositeDims& dims);

/// Lift a boundary jump set to the composite space: K -> K (x) I, L -> L (x) I.
JumpSet lift_local(const JumpSet& local, const CompositeDims& dims);

/// Jump operators sqrt(rate) * target^(1/2) |i><j| realizing the reset map
/// X -> rate * (Tr[X] target - X). The lamb shift is zero and the jumps sum
/// to sum L^dagger L = rate * I.
JumpSet reset_dissipator_jumps(const ComplexMatrix& target, double rate);

Liouvillian assemble_liouvillian(const HamiltonianDecomposition& hdec, const JumpSet& jumps);
Liouvillian assemble_liouvillian(const ComplexMatrix& h, const JumpSet& jumps,
                                 const CompositeDims& dims);

/// Dissipator-only superoperator (shift commutator plus jump sandwich terms)
/// on the jump set's own space.
ComplexMatrix dissipator_superoperator(const JumpSet& jumps);

/// Dissipative part of the equation of motion applied directly to rho:
/// -i[K, rho] + sum_a (L rho L^dagger - 1/2 {L^dagger L, rho}).
ComplexMatrix apply_dissipator(const JumpSet& jumps, const ComplexMatrix& rho);

/// Unique stationary state of an ergodic jump set. Throws ValidationError
/// when the dissipator's kernel is not one-dimensional.
ComplexMatrix ergodic_steady_state(const JumpSet& jumps, double rank_tol = defaults::rank_tol);

/// Complete-positivity and trace-preservation certificate for exp(t * L),
/// via the smallest eigenvalue of the reshuffled (Choi) matrix.
struct CptpReport {
  bool passed = false;
  double trace_deviation = 0.0;
  double min_choi_eigenvalue = 0.0;
  double time = 0.0;
  double tolerance = 0.0;
};
CptpReport cptp_check(const Liouvillian& liou, double t, double tol = defaults::cptp_tol);

/// Choi matrix of a superoperator: C[(i,k),(j,l)] = <k| S(|i><j|) |l>.
ComplexMatrix choi_matrix(const ComplexMatrix& superop);

}  // namespace lindbladlab
