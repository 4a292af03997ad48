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

#include "lindbladlab/lindblad.hpp"

#include <cmath>

namespace lindbladlab {

namespace {

void check_jump_set(const JumpSet& jumps) {
  const Index d = jumps.lamb_shift.rows();
  if (d == 0 || jumps.lamb_shift.cols() != d)
    throw DimensionError("JumpSet: lamb shift must be square and non-empty");
  if (!is_hermitian(jumps.lamb_shift, 1e-10))
    throw ValidationError("JumpSet: lamb shift is not hermitian");
  for (const ComplexMatrix& l : jumps.jumps)
    if (l.rows() != d || l.cols() != d)
      throw DimensionError("JumpSet: jump operator shape differs from the lamb shift");
}

}  // namespace

JumpSet empty_jump_set(Index d) {
  if (d < 1) throw ValidationError("empty_jump_set: dimension must be positive");
  return JumpSet{ComplexMatrix::Zero(d, d), {}};
}

HamiltonianDecomposition decompose_hamiltonian(const ComplexMatrix& h, const CompositeDims& dims) {
  check_dims(dims);
  if (h.rows() != dims.total() || h.cols() != dims.total())
    throw DimensionError("decompose_hamiltonian: operator of size " + std::to_string(h.rows()) +
                         " does not match total dimension " + std::to_string(dims.total()));
  if (!is_hermitian(h, 1e-10))
    throw ValidationError("decompose_hamiltonian: hamiltonian is not hermitian");

  const Index da = dims.dim_a, db = dims.dim_b;
  const Complex tr = h.trace();
  HamiltonianDecomposition dec;
  dec.dims = dims;
  dec.h_total = h;
  // The scalar part goes entirely to h_a, leaving h_b traceless.
  dec.h_a = partial_trace(h, dims, Subsystem::A) / static_cast<double>(db);
  dec.h_b = partial_trace(h, dims, Subsystem::B) / static_cast<double>(da) -
            (tr / static_cast<double>(da * db)) * ComplexMatrix::Identity(db, db);
  dec.h_ab = h - kron(dec.h_a, ComplexMatrix::Identity(db, db)) -
             kron(ComplexMatrix::Identity(da, da), dec.h_b);
  return dec;
}

JumpSet lift_local(const JumpSet& local, const CompositeDims& dims) {
  check_dims(dims);
  check_jump_set(local);
  if (local.dim() != dims.dim_a)
    throw DimensionError("lift_local: boundary jump set of size " + std::to_string(local.dim()) +
                         " does not match dim_a = " + std::to_string(dims.dim_a));
  const ComplexMatrix eye_b = ComplexMatrix::Identity(dims.dim_b, dims.dim_b);
  JumpSet lifted;
  lifted.lamb_shift = kron(local.lamb_shift, eye_b);
  lifted.jumps.reserve(local.jumps.size());
  for (const ComplexMatrix& l : local.jumps) lifted.jumps.push_back(kron(l, eye_b));
  return lifted;
}

JumpSet reset_dissipator_jumps(const ComplexMatrix& target, double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw ValidationError("reset_dissipator_jumps: rate must be positive and finite");
  if (!is_density(target, 1e-10))
    throw ValidationError("reset_dissipator_jumps: target is not a density matrix");
  const Index d = target.rows();
  const ComplexMatrix root = std::sqrt(rate) * psd_sqrt(target);
  JumpSet out = empty_jump_set(d);
  out.jumps.reserve(static_cast<std::size_t>(d * d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      ComplexMatrix l = ComplexMatrix::Zero(d, d);
      l.col(j) = root.col(i);  // sqrt(rate) * target^(1/2) |i><j|
      out.jumps.push_back(std::move(l));
    }
  return out;
}

ComplexMatrix dissipator_superoperator(const JumpSet& jumps) {
  check_jump_set(jumps);
  const Index d = jumps.dim();
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  ComplexMatrix m =
      -i_unit * (kron(eye, jumps.lamb_shift) - kron(jumps.lamb_shift.transpose(), eye));
  for (const ComplexMatrix& l : jumps.jumps) {
    const ComplexMatrix ll = l.adjoint() * l;
    m += kron(l.conjugate(), l) - 0.5 * kron(eye, ll) - 0.5 * kron(ll.transpose(), eye);
  }
  return m;
}

Liouvillian assemble_liouvillian(const HamiltonianDecomposition& hdec, const JumpSet& jumps) {
  check_dims(hdec.dims);
  check_jump_set(jumps);
  const Index d = hdec.dims.total();
  if (hdec.h_total.rows() != d || hdec.h_total.cols() != d)
    throw DimensionError("assemble_liouvillian: hamiltonian does not match the bipartition");
  if (jumps.dim() != d)
    throw DimensionError("assemble_liouvillian: jump set of size " + std::to_string(jumps.dim()) +
                         " does not match total dimension " + std::to_string(d));

  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  const ComplexMatrix h = hdec.h_total;
  Liouvillian liou;
  liou.dims = hdec.dims;
  liou.hamiltonian = hdec;
  liou.jumps = jumps;
  liou.matrix = -i_unit * (kron(eye, h) - kron(h.transpose(), eye));
  liou.matrix += dissipator_superoperator(jumps);

  // Construction sanity: the generator annihilates the trace functional.
  const ComplexVector eye_vec = vectorize(eye);
  const double trace_row = (eye_vec.adjoint() * liou.matrix).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, liou.matrix.cwiseAbs().maxCoeff());
  if (trace_row > 1e-10 * scale)
    throw NumericalError("assemble_liouvillian: trace preservation violated (" +
                         std::to_string(trace_row) + ")");
  return liou;
}

Liouvillian assemble_liouvillian(const ComplexMatrix& h, const JumpSet& jumps,
                                 const CompositeDims& dims) {
  return assemble_liouvillian(decompose_hamiltonian(h, dims), jumps);
}

ComplexMatrix apply_dissipator(const JumpSet& jumps, const ComplexMatrix& rho) {
  check_jump_set(jumps);
  const Index d = jumps.dim();
  if (rho.rows() != d || rho.cols() != d)
    throw DimensionError("apply_dissipator: operand does not match the jump set");
  const Complex i_unit(0.0, 1.0);
  ComplexMatrix out = -i_unit * (jumps.lamb_shift * rho - rho * jumps.lamb_shift);
  for (const ComplexMatrix& l : jumps.jumps) {
    const ComplexMatrix ll = l.adjoint() * l;
    out += l * rho * l.adjoint() - 0.5 * (ll * rho + rho * ll);
  }
  return out;
}

ComplexMatrix ergodic_steady_state(const JumpSet& jumps, double rank_tol) {
  const ComplexMatrix m = dissipator_superoperator(jumps);
  const ComplexMatrix kernel = null_space(m, rank_tol);
  if (kernel.cols() != 1)
    throw ValidationError("ergodic_steady_state: dissipator is not ergodic (stationary dimension " +
                          std::to_string(kernel.cols()) + ")");
  ComplexMatrix rho = devectorize(ComplexVector(kernel.col(0)), jumps.dim(), jumps.dim());
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-8)
    throw NumericalError("ergodic_steady_state: stationary direction has vanishing trace");
  rho /= tr;
  return ((rho + rho.adjoint()) / 2.0).eval();
}

ComplexMatrix choi_matrix(const ComplexMatrix& superop) {
  if (superop.rows() != superop.cols())
    throw DimensionError("choi_matrix: superoperator must be square");
  const Index d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(superop.rows()))));
  if (d * d != superop.rows())
    throw DimensionError("choi_matrix: size " + std::to_string(superop.rows()) +
                         " is not a perfect square");
  ComplexMatrix choi(d * d, d * d);
  // vec(|i><j|) is the unit vector at j*d + i; S(|i><j|)[k,l] sits at row l*d+k.
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l)
          choi(i * d + k, j * d + l) = superop(l * d + k, j * d + i);
  return choi;
}

CptpReport cptp_check(const Liouvillian& liou, double t, double tol) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ValidationError("cptp_check: time must be non-negative and finite");
  const Index d = liou.dim();
  const ComplexMatrix prop = matrix_exp((t * liou.matrix).eval());
  const ComplexVector eye_vec = vectorize(ComplexMatrix::Identity(d, d));
  CptpReport rep;
  rep.time = t;
  rep.tolerance = tol;
  rep.trace_deviation = (prop.adjoint() * eye_vec - eye_vec).cwiseAbs().maxCoeff();
  rep.min_choi_eigenvalue = min_eigenvalue(choi_matrix(prop));
  rep.passed = rep.trace_deviation <= tol && rep.min_choi_eigenvalue >= -tol;
  return rep;
}

}  // namespace lindbladlab
