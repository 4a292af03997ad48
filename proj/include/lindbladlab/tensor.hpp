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

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lindbladlab/core.hpp"

namespace lindbladlab {

enum class Subsystem { A, B };

/// Kronecker product with the block convention
/// (a (x) b)(i*rows_b + k, j*cols_b + l) = a(i, j) * b(k, l),
/// so the left factor indexes the slow (most significant) part of the basis.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Trace out one factor of a bipartite operator. keep == Subsystem::A returns
/// Tr_B(m) of size dim_a; keep == Subsystem::B returns Tr_A(m) of size dim_b.
template <typename Derived>
auto partial_trace(const Eigen::MatrixBase<Derived>& m, const CompositeDims& dims,
                   Subsystem keep) {
  using Scalar = typename Derived::Scalar;
  const Index da = dims.dim_a, db = dims.dim_b;
  if (da < 1 || db < 1 || m.rows() != da * db || m.cols() != da * db)
    throw DimensionError("partial_trace: operand of size " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " does not factor as (" + std::to_string(da) +
                         ", " + std::to_string(db) + ")");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out;
  if (keep == Subsystem::A) {
    out.setZero(da, da);
    for (Index i = 0; i < da; ++i)
      for (Index j = 0; j < da; ++j)
        for (Index k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
  } else {
    out.setZero(db, db);
    for (Index k = 0; k < db; ++k)
      for (Index l = 0; l < db; ++l)
        for (Index i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  }
  return out;
}

/// Column-stacking vectorization, so that vec(A X B) = (B^T (x) A) vec(X).
template <typename Derived>
auto vectorize(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::Vector<Scalar, Eigen::Dynamic> v(m.size());
  for (Index j = 0; j < m.cols(); ++j) v.segment(j * m.rows(), m.rows()) = m.col(j);
  return v;
}

template <typename Derived>
auto devectorize(const Eigen::MatrixBase<Derived>& v, Index rows, Index cols) {
  using Scalar = typename Derived::Scalar;
  if (v.cols() != 1 || v.size() != rows * cols)
    throw DimensionError("devectorize: vector of length " + std::to_string(v.size()) +
                         " cannot fill a " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rows, cols);
  for (Index j = 0; j < cols; ++j) out.col(j) = v.segment(j * rows, rows);
  return out;
}

template <typename Derived>
auto devectorize(const Eigen::MatrixBase<Derived>& v) {
  const Index n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (v.cols() != 1 || n * n != v.size())
    throw DimensionError("devectorize: length " + std::to_string(v.size()) +
                         " is not a perfect square");
  return devectorize(v, n, n);
}

/// Hilbert-Schmidt pairing Tr[a^dagger b], antilinear in the first slot.
template <typename DerivedA, typename DerivedB>
auto hs_inner(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: operands have different shapes");
  return a.conjugate().cwiseProduct(b).sum();
}

/// Apply a d^2 x d^2 superoperator to a d x d operator via the vec convention.
inline ComplexMatrix apply_superoperator(const ComplexMatrix& superop, const ComplexMatrix& x) {
  if (x.rows() != x.cols()) throw DimensionError("apply_superoperator: operand must be square");
  if (superop.rows() != superop.cols() || superop.rows() != x.size())
    throw DimensionError("apply_superoperator: superoperator of size " +
                         std::to_string(superop.rows()) + " does not act on a " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " operand");
  return devectorize(ComplexVector(superop * vectorize(x)), x.rows(), x.cols());
}

bool is_hermitian(const ComplexMatrix& m, double tol = defaults::hermitian_tol);
bool is_psd(const ComplexMatrix& m, double tol = defaults::density_tol);
bool is_density(const ComplexMatrix& m, double tol = defaults::density_tol);

/// Smallest eigenvalue of a (numerically) hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m);

/// Hermitian square root with eigenvalues in [-tol, 0) clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = defaults::positivity_tol);

/// Orthonormal basis of the right null space: columns v with
/// ||m v|| <= O(tol) * sigma_max(m). The cut keeps singular values
/// sigma <= tol * sigma_max; a zero matrix yields the full space.
ComplexMatrix null_space(const ComplexMatrix& m, double tol = defaults::rank_tol);

/// Right and left kernels of a square matrix from one decomposition:
/// right spans {v : m v = 0}, left spans {w : m^dagger w = 0}.
struct KernelPair {
  ComplexMatrix right;
  ComplexMatrix left;
  double sigma_max = 0.0;
};
KernelPair kernel_pair(const ComplexMatrix& m, double tol = defaults::rank_tol);

ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// Orthonormal basis of the column span; pivots below tol * |largest pivot|
/// do not count toward the rank.
ComplexMatrix orthonormal_columns(const ComplexMatrix& m, double tol = defaults::rank_tol);

/// Hermitian orthonormal basis (real span, unit Frobenius norm) of an
/// adjoint-closed operator subspace given as d^2-vectorized columns.
std::vector<ComplexMatrix> hermitian_span_basis(const ComplexMatrix& span_columns, Index d,
                                                double tol = defaults::rank_tol);

/// Intersection of two column spans with orthonormal columns; directions whose
/// principal-angle cosine exceeds 1 - tol are kept. Columns are orthonormal.
ComplexMatrix subspace_intersection(const ComplexMatrix& u, const ComplexMatrix& v,
                                    double tol = 1e-8);

}  // namespace lindbladlab
