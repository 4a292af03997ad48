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

#include "lindbladlab/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace lindbladlab {

namespace {

struct SvdResult {
  Eigen::VectorXd sigma;
  ComplexMatrix u;  // empty unless requested
  ComplexMatrix v;
};

// JacobiSVD is more accurate on tiny problems; BDCSVD scales to the
// superoperator sizes. Both sort singular values in decreasing order.
SvdResult svd_of(const ComplexMatrix& m, bool want_u) {
  const unsigned options =
      (want_u ? Eigen::ComputeFullU : 0u) | Eigen::ComputeFullV;
  SvdResult r;
  if (m.rows() <= 64 && m.cols() <= 64) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m, options);
    r.sigma = svd.singularValues();
    if (want_u) r.u = svd.matrixU();
    r.v = svd.matrixV();
  } else {
    Eigen::BDCSVD<ComplexMatrix> svd(m, options);
    r.sigma = svd.singularValues();
    if (want_u) r.u = svd.matrixU();
    r.v = svd.matrixV();
  }
  return r;
}

// First singular-value index counted into the kernel.
Index kernel_cut(const Eigen::VectorXd& sigma, double tol) {
  const double smax = sigma.size() ? sigma(0) : 0.0;
  const double cut = tol * smax;
  Index first = sigma.size();
  while (first > 0 && sigma(first - 1) <= cut) --first;
  return first;
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("min_eigenvalue: matrix must be square");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(((m + m.adjoint()) / 2.0).eval(),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  return min_eigenvalue(m) >= -tol;
}

bool is_density(const ComplexMatrix& m, double tol) {
  if (!is_psd(m, tol)) return false;
  return std::abs(m.trace() - Complex(1.0)) <= tol;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("psd_sqrt: matrix must be square");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(((m + m.adjoint()) / 2.0).eval());
  Eigen::VectorXd lambda = es.eigenvalues();
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -tol)
      throw ValidationError("psd_sqrt: eigenvalue " + std::to_string(lambda(i)) +
                            " below -tolerance");
    if (lambda(i) < 0.0) lambda(i) = 0.0;
  }
  return es.eigenvectors() * lambda.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix null_space(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) throw ValidationError("null_space: empty matrix");
  if (tol < 0.0) throw ValidationError("null_space: negative tolerance");
  // A tall stack has the same singular values and right-singular vectors as
  // its triangular QR factor; reducing first is much cheaper than a tall SVD.
  ComplexMatrix work;
  if (m.rows() > 2 * m.cols()) {
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    work = ComplexMatrix(qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>());
  } else {
    work = m;
  }
  const SvdResult r = svd_of(work, /*want_u=*/false);
  const Index first = kernel_cut(r.sigma, tol);
  // Columns of V beyond the singular-value count belong to the kernel of a
  // wide matrix as well.
  return r.v.rightCols(r.v.cols() - first);
}

KernelPair kernel_pair(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) throw ValidationError("kernel_pair: empty matrix");
  if (m.rows() != m.cols()) throw DimensionError("kernel_pair: matrix must be square");
  const SvdResult r = svd_of(m, /*want_u=*/true);
  const Index first = kernel_cut(r.sigma, tol);
  KernelPair kp;
  kp.sigma_max = r.sigma.size() ? r.sigma(0) : 0.0;
  kp.right = r.v.rightCols(r.v.cols() - first);
  kp.left = r.u.rightCols(r.u.cols() - first);
  return kp;
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("matrix_exp: matrix must be square");
  return m.exp();
}

ComplexMatrix orthonormal_columns(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0) throw ValidationError("orthonormal_columns: empty matrix");
  if (m.cols() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr;
  qr.setThreshold(tol);
  qr.compute(m);
  const Index r = qr.rank();
  return qr.householderQ() * ComplexMatrix::Identity(m.rows(), r);
}

std::vector<ComplexMatrix> hermitian_span_basis(const ComplexMatrix& span_columns, Index d,
                                                double tol) {
  const Index m = span_columns.cols();
  if (m == 0) return {};
  if (span_columns.rows() != d * d)
    throw DimensionError("hermitian_span_basis: columns of length " +
                         std::to_string(span_columns.rows()) + " are not " + std::to_string(d) +
                         "^2-vectorized operators");
  // Real embedding [Re vec; Im vec]: the Euclidean product equals the real
  // part of the Hilbert-Schmidt pairing, so a real rank-revealing QR yields a
  // Frobenius-orthonormal hermitian basis of the (adjoint-closed) span.
  const Index d2 = d * d;
  Eigen::MatrixXd cand(2 * d2, 2 * m);
  for (Index k = 0; k < m; ++k) {
    const ComplexMatrix x = devectorize(ComplexVector(span_columns.col(k)), d, d);
    const ComplexMatrix h = (x + x.adjoint()) / 2.0;
    const ComplexMatrix a = (x - x.adjoint()) / Complex(0.0, 2.0);
    const ComplexVector vh = vectorize(h);
    const ComplexVector va = vectorize(a);
    cand.col(2 * k) << vh.real(), vh.imag();
    cand.col(2 * k + 1) << va.real(), va.imag();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
  qr.setThreshold(tol);
  qr.compute(cand);
  const Index r = qr.rank();
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(2 * d2, r);
  std::vector<ComplexMatrix> out;
  out.reserve(r);
  for (Index k = 0; k < r; ++k) {
    const ComplexVector v =
        q.col(k).head(d2).cast<Complex>() + Complex(0.0, 1.0) * q.col(k).tail(d2).cast<Complex>();
    const ComplexMatrix x = devectorize(v, d, d);
    out.push_back(((x + x.adjoint()) / 2.0).eval());
  }
  return out;
}

ComplexMatrix subspace_intersection(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  if (u.rows() != v.rows())
    throw DimensionError("subspace_intersection: ambient dimensions differ");
  if (u.cols() == 0 || v.cols() == 0) return ComplexMatrix(u.rows(), 0);
  const ComplexMatrix overlap = u.adjoint() * v;
  Eigen::JacobiSVD<ComplexMatrix> svd(overlap, Eigen::ComputeFullU);
  const Eigen::VectorXd sigma = svd.singularValues();
  Index k = 0;
  while (k < sigma.size() && sigma(k) >= 1.0 - tol) ++k;
  return u * svd.matrixU().leftCols(k);
}

}  // namespace lindbladlab
