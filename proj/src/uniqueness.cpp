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

#include "lindbladlab/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "lindbladlab/steady_state.hpp"

namespace lindbladlab {

namespace {

ComplexMatrix hermitize(const ComplexMatrix& m) { return ((m + m.adjoint()) / 2.0).eval(); }

// Columns spanning the traceless part of a hermitian operator list,
// orthonormalized over the reals. Candidates that are multiples of the
// identity drop out through the absolute floor.
std::vector<ComplexMatrix> traceless_hermitian_part(const std::vector<ComplexMatrix>& ops,
                                                    Index d) {
  std::vector<ComplexMatrix> kept;
  for (const ComplexMatrix& s : ops) {
    ComplexMatrix t = s - (s.trace() / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);
    if (t.norm() > 1e-8) kept.push_back(std::move(t));
  }
  if (kept.empty()) return {};
  ComplexMatrix cols(d * d, static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k)
    cols.col(static_cast<Index>(k)) = vectorize(kept[k]);
  const ComplexMatrix q = orthonormal_columns(cols, 1e-8);
  return hermitian_span_basis(q, d);
}

}  // namespace

CommutantResult commutant(const std::vector<ComplexMatrix>& generators, double tol) {
  if (generators.empty()) throw ValidationError("commutant: generator list is empty");
  const Index d = generators.front().rows();
  if (d < 1) throw ValidationError("commutant: empty generator");
  CommutantResult out;
  for (const ComplexMatrix& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw DimensionError("commutant: generators have mismatched shapes");
    out.generators.push_back(g);
    if ((g - g.adjoint()).norm() > 1e-14 * std::max(1.0, g.norm()))
      out.generators.push_back(g.adjoint());
  }

  const Index d2 = d * d;
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  ComplexMatrix stack(static_cast<Index>(out.generators.size()) * d2, d2);
  for (std::size_t k = 0; k < out.generators.size(); ++k) {
    const ComplexMatrix& g = out.generators[k];
    stack.middleRows(static_cast<Index>(k) * d2, d2) =
        kron(eye, g) - kron(g.transpose(), eye);
  }
  const ComplexMatrix kernel = null_space(stack, tol);
  out.dimension = kernel.cols();
  out.basis.reserve(static_cast<std::size_t>(out.dimension));
  for (Index k = 0; k < kernel.cols(); ++k)
    out.basis.push_back(devectorize(ComplexVector(kernel.col(k)), d, d));
  return out;
}

FrigerioReport frigerio_uniqueness(const Liouvillian& liou) {
  const StationaryAnalysis analysis(liou);
  FrigerioReport rep;
  rep.min_steady_eigenvalue = analysis.min_steady_eigenvalue();
  if (rep.min_steady_eigenvalue <= defaults::positivity_tol) {
    rep.verdict = UniquenessVerdict::Inapplicable;
    return rep;
  }

  std::vector<ComplexMatrix> gens;
  gens.reserve(liou.jumps.jumps.size() + 1);
  gens.push_back(liou.hamiltonian.h_total + liou.jumps.lamb_shift);
  for (const ComplexMatrix& l : liou.jumps.jumps) gens.push_back(l);
  const CommutantResult c = commutant(gens);
  rep.commutant_dimension = c.dimension;
  if (c.dimension == 1) {
    rep.verdict = UniquenessVerdict::Unique;
    return rep;
  }

  rep.verdict = UniquenessVerdict::NotUnique;
  const Index d = liou.dim();
  double best = 0.0;
  for (const ComplexMatrix& x : c.basis) {
    const ComplexMatrix t =
        x - (x.trace() / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);
    if (t.norm() > best) {
      best = t.norm();
      rep.witness = t / t.norm();
      rep.has_witness = true;
    }
  }
  return rep;
}

std::vector<ComplexMatrix> bulk_commutant_solver(const ComplexMatrix& h, const CompositeDims& dims,
                                                 double tol) {
  check_dims(dims);
  const Index d = dims.total(), da = dims.dim_a, db = dims.dim_b;
  if (h.rows() != d || h.cols() != d)
    throw DimensionError("bulk_commutant_solver: operator does not match the bipartition");
  if (!is_hermitian(h, 1e-10))
    throw ValidationError("bulk_commutant_solver: hamiltonian is not hermitian");

  // Columns of the map X_B -> [h, I (x) X_B] over bulk matrix units.
  const ComplexMatrix eye_a = ComplexMatrix::Identity(da, da);
  ComplexMatrix map(d * d, db * db);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(db, db);
      unit(i, j) = 1.0;
      const ComplexMatrix lifted = kron(eye_a, unit);
      map.col(j * db + i) = vectorize((h * lifted - lifted * h).eval());
    }

  const ComplexMatrix kernel = null_space(map, tol);
  const std::vector<ComplexMatrix> herm = hermitian_span_basis(kernel, db, tol);
  return traceless_hermitian_part(herm, db);
}

BulkUniquenessReport bulk_uniqueness_verdict(const HamiltonianDecomposition& hdec,
                                             const JumpSet& local) {
  if (local.dim() != hdec.dims.dim_a)
    throw DimensionError("bulk_uniqueness_verdict: boundary jump set does not match dim_a");

  BulkUniquenessReport rep;
  ComplexMatrix rho_a;
  try {
    rho_a = ergodic_steady_state(local);
  } catch (const ValidationError&) {
    rep.verdict = BulkUniquenessVerdict::Inapplicable;
    return rep;
  }
  if (min_eigenvalue(rho_a) <= defaults::positivity_tol) {
    rep.verdict = BulkUniquenessVerdict::Inapplicable;
    return rep;
  }

  const std::vector<ComplexMatrix> basis = bulk_commutant_solver(hdec.h_total, hdec.dims);
  rep.bulk_commutant_dimension = static_cast<Index>(basis.size());
  if (basis.empty()) {
    rep.verdict = BulkUniquenessVerdict::UniquePositiveDefinite;
    return rep;
  }

  rep.verdict = BulkUniquenessVerdict::NotUnique;
  rep.witness = basis.front();
  rep.has_witness = true;
  const ComplexMatrix lifted =
      kron(ComplexMatrix::Identity(hdec.dims.dim_a, hdec.dims.dim_a), rep.witness);
  rep.witness_bulk_residual = (hdec.h_b * rep.witness - rep.witness * hdec.h_b).norm();
  rep.witness_interaction_residual = (hdec.h_ab * lifted - lifted * hdec.h_ab).norm();
  return rep;
}

ClosureReport yoshida_check(const Liouvillian& liou) {
  const Index d = liou.dim();
  const Index d2 = d * d;

  ComplexMatrix heff = liou.hamiltonian.h_total + liou.jumps.lamb_shift;
  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& l : liou.jumps.jumps) gram += l.adjoint() * l;
  heff -= Complex(0.0, 0.5) * gram;

  std::vector<ComplexMatrix> gens;
  if (heff.norm() > 1e-14) gens.push_back(heff / heff.norm());
  for (const ComplexMatrix& l : liou.jumps.jumps)
    if (l.norm() > 1e-14) gens.push_back(l / l.norm());

  // Grow the span of words breadth-first; right-multiplying only the newest
  // directions by the generators reaches the same closure as pairwise
  // products because the identity seeds the word set.
  ComplexMatrix basis(d2, 1);
  basis.col(0) = vectorize(ComplexMatrix::Identity(d, d)) / std::sqrt(static_cast<double>(d));
  Index frontier_begin = 0;

  ClosureReport rep;
  const Index max_rounds = 2 * d2;
  // Accept relative to the product's own size: long words of normalized
  // generators shrink geometrically, while projection noise stays many orders
  // below this cut.
  constexpr double accept_tol = 1e-8;
  while (rep.rounds < max_rounds && basis.cols() < d2) {
    const Index frontier_end = basis.cols();
    std::vector<ComplexVector> survivors;
    for (Index c = frontier_begin; c < frontier_end; ++c) {
      const ComplexMatrix word = devectorize(ComplexVector(basis.col(c)), d, d);
      for (const ComplexMatrix& g : gens) {
        ComplexVector cand = vectorize((word * g).eval());
        const double pre = cand.norm();
        if (pre < 1e-12) continue;
        cand -= basis * (basis.adjoint() * cand).eval();
        cand -= basis * (basis.adjoint() * cand).eval();
        if (cand.norm() > accept_tol * pre) survivors.push_back(cand / cand.norm());
      }
    }
    ++rep.rounds;
    if (survivors.empty()) break;

    ComplexMatrix block(d2, static_cast<Index>(survivors.size()));
    for (std::size_t k = 0; k < survivors.size(); ++k)
      block.col(static_cast<Index>(k)) = survivors[k];
    const ComplexMatrix fresh = orthonormal_columns(block, 1e-6);
    if (fresh.cols() == 0) break;

    const Index keep = std::min(fresh.cols(), d2 - basis.cols());
    basis.conservativeResize(Eigen::NoChange, frontier_end + keep);
    basis.rightCols(keep) = fresh.leftCols(keep);
    frontier_begin = frontier_end;
  }

  rep.closure_dimension = basis.cols();
  rep.verdict = (basis.cols() == d2) ? ClosureVerdict::UniqueSufficient
                                     : ClosureVerdict::Inconclusive;
  return rep;
}

namespace {

struct BlockData {
  Index nullspace_dim = 0;
  std::vector<ComplexMatrix> projections;
  std::vector<ComplexMatrix> block_states;
};

// Minimal central projections of the asymptotic algebra of a generator given
// as a plain superoperator, assuming a faithful stationary state.
BlockData decompose_faithful(const ComplexMatrix& superop, Index d, std::uint64_t seed) {
  const StationaryAnalysis analysis(superop, d);
  const ComplexMatrix& w = analysis.adjoint_kernel();  // ker(L^dagger), vectorized
  const Index m = w.cols();

  BlockData out;
  out.nullspace_dim = m;

  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(m));
  for (Index k = 0; k < m; ++k) ops.push_back(devectorize(ComplexVector(w.col(k)), d, d));

  // ker(L^dagger) must close under products and adjoints; failure signals the
  // faithfulness precondition did not actually hold at this tolerance.
  for (const ComplexMatrix& a : ops) {
    const ComplexVector va = vectorize(a.adjoint().eval());
    if ((va - w * (w.adjoint() * va).eval()).norm() > 1e-8 * std::max(1.0, va.norm()))
      throw NumericalError("ergodic_decomposition: asymptotic space is not adjoint-closed");
    for (const ComplexMatrix& b : ops) {
      const ComplexVector vp = vectorize((a * b).eval());
      if ((vp - w * (w.adjoint() * vp).eval()).norm() > 1e-8 * std::max(1.0, vp.norm()))
        throw NumericalError("ergodic_decomposition: asymptotic space is not product-closed");
    }
  }

  // Center = the algebra intersected with its own commutant.
  const CommutantResult comm = commutant(ops);
  ComplexMatrix comm_cols(d * d, comm.dimension);
  for (Index k = 0; k < comm.dimension; ++k) comm_cols.col(k) = vectorize(comm.basis[k]);
  const ComplexMatrix center = subspace_intersection(w, comm_cols);
  const Index blocks = center.cols();
  if (blocks == 0)
    throw NumericalError("ergodic_decomposition: center resolved as empty");

  const std::vector<ComplexMatrix> center_herm = hermitian_span_basis(center, d);

  // A generic element of the commutative center has one eigenvalue per
  // minimal block; its spectral projections are the central projections.
  std::mt19937_64 rng(seed ^ 0xb10c5ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 20; ++attempt) {
    ComplexMatrix generic = ComplexMatrix::Zero(d, d);
    for (const ComplexMatrix& s : center_herm) generic += normal(rng) * s;
    if (generic.norm() < 1e-12) continue;
    generic /= generic.norm();

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(generic);
    const Eigen::VectorXd lambda = es.eigenvalues();
    std::vector<Index> cuts{0};
    for (Index i = 1; i < lambda.size(); ++i)
      if (lambda(i) - lambda(i - 1) > 1e-6) cuts.push_back(i);
    cuts.push_back(lambda.size());
    if (static_cast<Index>(cuts.size()) - 1 != blocks) continue;  // clustered too coarsely

    std::vector<ComplexMatrix> projections;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      ComplexMatrix p = ComplexMatrix::Zero(d, d);
      for (Index i = cuts[c]; i < cuts[c + 1]; ++i)
        p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      projections.push_back(hermitize(p));
    }

    // Deterministic order: descending rank, then lexicographic diagonal.
    std::sort(projections.begin(), projections.end(),
              [](const ComplexMatrix& a, const ComplexMatrix& b) {
                const double ta = a.trace().real(), tb = b.trace().real();
                if (std::abs(ta - tb) > 0.5) return ta > tb;
                for (Index i = 0; i < a.rows(); ++i) {
                  const double da = a(i, i).real(), db = b(i, i).real();
                  if (std::abs(da - db) > 1e-9) return da > db;
                }
                return false;
              });

    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    bool ok = true;
    for (const ComplexMatrix& p : projections) {
      if ((p * p - p).norm() > 1e-9) ok = false;
      if ((superop.adjoint() * vectorize(p)).norm() >
          1e-8 * std::max(1.0, superop.norm()))
        ok = false;
      sum += p;
    }
    if ((sum - ComplexMatrix::Identity(d, d)).norm() > 1e-9) ok = false;
    if (!ok) continue;

    out.projections = projections;
    for (const ComplexMatrix& p : out.projections)
      out.block_states.push_back(hermitize(analysis.project(p / p.trace().real())));
    return out;
  }
  throw NumericalError(
      "ergodic_decomposition: could not isolate the central projections after 20 draws");
}

}  // namespace

ErgodicDecomposition ergodic_decomposition(const Liouvillian& liou, std::uint64_t seed) {
  const StationaryAnalysis analysis(liou);
  const Index d = liou.dim();

  ErgodicDecomposition out;
  out.transient_part = analysis.min_steady_eigenvalue() <= defaults::positivity_tol;

  if (!out.transient_part) {
    out.support_projector = ComplexMatrix::Identity(d, d);
    BlockData data = decompose_faithful(liou.matrix, d, seed);
    out.nullspace_dim = data.nullspace_dim;
    out.is_algebra = true;
    out.center_projections = std::move(data.projections);
    out.block_states = std::move(data.block_states);
    return out;
  }

  // Restrict to the support of the maximal-support state, where the evolution
  // has a faithful stationary state, then lift the projections back.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(analysis.maximal_support_state());
  std::vector<Index> kept;
  for (Index i = 0; i < d; ++i)
    if (es.eigenvalues()(i) > defaults::positivity_tol) kept.push_back(i);
  if (kept.empty())
    throw NumericalError("ergodic_decomposition: stationary state has empty support");
  const Index r = static_cast<Index>(kept.size());
  ComplexMatrix isometry(d, r);
  for (Index k = 0; k < r; ++k) isometry.col(k) = es.eigenvectors().col(kept[k]);

  ComplexMatrix restricted(r * r, r * r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(r, r);
      unit(i, j) = 1.0;
      const ComplexMatrix image = apply_superoperator(
          liou.matrix, (isometry * unit * isometry.adjoint()).eval());
      restricted.col(j * r + i) =
          vectorize((isometry.adjoint() * image * isometry).eval());
    }

  BlockData data = decompose_faithful(restricted, r, seed);
  out.nullspace_dim = data.nullspace_dim;
  out.is_algebra = true;
  out.support_projector = isometry * isometry.adjoint();
  for (std::size_t k = 0; k < data.projections.size(); ++k) {
    out.center_projections.push_back(
        hermitize(isometry * data.projections[k] * isometry.adjoint()));
    out.block_states.push_back(
        hermitize(isometry * data.block_states[k] * isometry.adjoint()));
  }
  return out;
}

}  // namespace lindbladlab
