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

#include <doctest.h>

#include <cmath>

#include "lindbladlab/lindblad.hpp"
#include "lindbladlab/steady_state.hpp"
#include "lindbladlab/tensor.hpp"
#include "support/pauli.hpp"
#include "support/random_models.hpp"

using namespace lindbladlab;
using namespace lindbladlab::testing;

namespace {

Liouvillian dephasing_qubit() {
  JumpSet jumps = empty_jump_set(2);
  jumps.jumps.push_back(sigma_z());
  return assemble_liouvillian(ComplexMatrix::Zero(2, 2), jumps, CompositeDims{2, 1});
}

}  // namespace

TEST_CASE("zero generator: everything is stationary") {
  const Liouvillian zero =
      assemble_liouvillian(ComplexMatrix::Zero(2, 2), empty_jump_set(2), CompositeDims{2, 1});
  const StationaryAnalysis analysis(zero);
  CHECK(analysis.kernel_dimension() == 4);
  CHECK((analysis.projector() - ComplexMatrix::Identity(4, 4)).norm() < 1e-12);
  CHECK((analysis.maximal_support_state() - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);
  CHECK(analysis.min_steady_eigenvalue() == doctest::Approx(0.5));
  CHECK(analysis.stationary_basis().dimension == 4);
}

TEST_CASE("reset qubit: one stationary state, rank-one projector") {
  auto gen = rng(31);
  const ComplexMatrix target = random_pd_density(2, gen);
  const Liouvillian liou = assemble_liouvillian(
      ComplexMatrix::Zero(2, 2), reset_dissipator_jumps(target, 0.9), CompositeDims{2, 1});
  const StationaryAnalysis analysis(liou);

  CHECK(analysis.kernel_dimension() == 1);
  CHECK((analysis.maximal_support_state() - target).norm() < 1e-12);
  // P = vec(target) vec(I)^dagger: project-anything-to-the-target, weighted by trace.
  const ComplexVector vt = vectorize(target);
  const ComplexVector vi = vectorize(ComplexMatrix::Identity(2, 2).eval());
  CHECK((analysis.projector() - vt * vi.adjoint()).norm() < 1e-9);

  const StationaryBasis basis = analysis.stationary_basis();
  REQUIRE(basis.dimension == 1);
  CHECK((basis.states[0] - target).norm() < 1e-12);

  // Free-function entry points agree with the class.
  CHECK((maximal_support_state(liou) - target).norm() < 1e-12);
  CHECK((mean_ergodic_projector(liou) - analysis.projector()).norm() < 1e-12);
  CHECK(stationary_basis(liou).dimension == 1);
}

TEST_CASE("dephasing qubit: two-dimensional diagonal stationary space") {
  const Liouvillian liou = dephasing_qubit();
  const StationaryAnalysis analysis(liou);

  CHECK(analysis.kernel_dimension() == 2);
  CHECK((analysis.maximal_support_state() - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-10);
  // Coherences are transient, populations are preserved.
  CHECK(analysis.project(sigma_x()).norm() < 1e-10);
  const ComplexMatrix e00 = unit_matrix(2, 0, 0);
  CHECK((analysis.project(e00) - e00).norm() < 1e-10);

  const StationaryBasis basis = analysis.stationary_basis();
  REQUIRE(basis.dimension == 2);
  for (const ComplexMatrix& s : basis.states) {
    CHECK(is_density(s, 1e-8));
    CHECK(apply_superoperator(liou.matrix, s).norm() < 1e-9);
    CHECK(s.cwiseAbs().maxCoeff() == doctest::Approx(s.diagonal().cwiseAbs().maxCoeff()));
  }

  // Maximal-support dominance: d * rho_max - s stays positive semidefinite.
  for (const ComplexMatrix& s : basis.states)
    CHECK(min_eigenvalue((2.0 * analysis.maximal_support_state() - s).eval()) > -1e-10);
}

TEST_CASE("defective zero eigenvalue is diagnosed, not silently projected") {
  // One Jordan block above the zero eigenvalue: kernel and cokernel are skew.
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(StationaryAnalysis(m, 2), NumericalError);
}

TEST_CASE("product_factor_check separates products from entangled states") {
  auto gen = rng(32);
  const CompositeDims dims{2, 3};
  const ComplexMatrix rho_a = random_density(2, gen);
  const ComplexMatrix rho_b = random_density(3, gen);

  SUBCASE("exact product against the right target") {
    const auto fac = product_factor_check(kron(rho_a, rho_b), dims, rho_a);
    CHECK(fac.residual < 1e-13);
    CHECK(fac.product);
    CHECK(fac.target_mismatch < 1e-13);
    CHECK(fac.matches_target);
    CHECK((fac.rho_a - rho_a).norm() < 1e-13);
    CHECK((fac.rho_b - rho_b).norm() < 1e-13);
  }
  SUBCASE("wrong target is reported") {
    const auto fac = product_factor_check(kron(rho_a, rho_b), dims, random_density(2, gen));
    CHECK(fac.product);
    CHECK_FALSE(fac.matches_target);
  }
  SUBCASE("Bell pair misses its marginal product by sqrt(3)/2") {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const ComplexMatrix rho = bell * bell.adjoint();
    const auto fac = product_factor_check(rho, CompositeDims{2, 2},
                                          (ComplexMatrix::Identity(2, 2) / 2.0).eval());
    CHECK(fac.residual == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK_FALSE(fac.product);
    CHECK(fac.matches_target);  // the marginal itself is still I/2
  }
  SUBCASE("non-state input is rejected") {
    CHECK_THROWS_AS(product_factor_check(kron(sigma_x(), sigma_z()), CompositeDims{2, 2},
                                         (ComplexMatrix::Identity(2, 2) / 2.0).eval()),
                    ValidationError);
  }
}

TEST_CASE("factor_commutation_diagnostics vanishes for thermal decoupled systems") {
  auto gen = rng(33);
  const CompositeDims dims{2, 3};
  const ComplexMatrix ha = random_hermitian(2, gen);
  const ComplexMatrix hb0 = random_hermitian(3, gen);
  const ComplexMatrix hb = hb0 - (hb0.trace() / 3.0) * ComplexMatrix::Identity(3, 3);
  const ComplexMatrix h = kron(ha, ComplexMatrix::Identity(3, 3)) +
                          kron(ComplexMatrix::Identity(2, 2), hb);
  const auto dec = decompose_hamiltonian(h, dims);
  const ComplexMatrix rho = kron(thermal_of(ha), thermal_of(hb));

  const auto diag = factor_commutation_diagnostics(rho, dec);
  CHECK(diag.preconditions_met);
  CHECK(diag.positive_definite);
  CHECK(diag.commutes_with_h);
  CHECK(diag.product_form);
  CHECK(diag.boundary_residual < 1e-12);
  CHECK(diag.bulk_residual < 1e-12);
  CHECK(diag.interaction_residual < 1e-12);
  CHECK(diag.within_tolerance);
}

TEST_CASE("factor_commutation_diagnostics reports unmet preconditions honestly") {
  const CompositeDims dims{2, 2};
  const auto dec = decompose_hamiltonian(kron(sigma_z(), sigma_z()), dims);

  SUBCASE("entangled state is not in product form") {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const auto diag = factor_commutation_diagnostics((bell * bell.adjoint()).eval(), dec);
    CHECK_FALSE(diag.product_form);
    CHECK_FALSE(diag.positive_definite);  // a pure state is singular
    CHECK_FALSE(diag.preconditions_met);
  }
  SUBCASE("product state that fails to commute with h") {
    auto gen = rng(34);
    // e^{-x sigma_x} does not commute with sigma_z (x) sigma_z.
    const ComplexMatrix rho = kron(thermal_of(sigma_x()), random_pd_density(2, gen));
    const auto diag = factor_commutation_diagnostics(rho, dec);
    CHECK(diag.product_form);
    CHECK(diag.positive_definite);
    CHECK_FALSE(diag.commutes_with_h);
    CHECK_FALSE(diag.preconditions_met);
  }
}

TEST_CASE("gibbs_nogo accepts decoupled thermal states and rejects coupled ones") {
  auto gen = rng(35);
  const CompositeDims dims{2, 3};
  const ComplexMatrix ha = random_hermitian(2, gen);
  const ComplexMatrix hb = random_hermitian(3, gen);
  const ComplexMatrix decoupled = kron(ha, ComplexMatrix::Identity(3, 3)) +
                                  kron(ComplexMatrix::Identity(2, 2), hb);
  const double beta = 0.7;

  SUBCASE("no interaction: the Gibbs state is stationary") {
    const auto dec = decompose_hamiltonian(decoupled, dims);
    const JumpSet local = reset_dissipator_jumps(thermal_of((beta * ha).eval()), 1.1);
    const auto rep = gibbs_nogo(dec, local, beta);
    CHECK(rep.residual < 1e-10);
    CHECK(rep.gibbs_stationary);
    CHECK(rep.interaction_zero);
    CHECK(rep.boundary_marginal_mismatch < 1e-10);
  }
  SUBCASE("infinite temperature: always stationary for a maximally mixed target") {
    const ComplexMatrix h = random_hermitian(6, gen);
    const auto dec = decompose_hamiltonian(h, dims);
    const JumpSet local =
        reset_dissipator_jumps((ComplexMatrix::Identity(2, 2) / 2.0).eval(), 0.4);
    const auto rep = gibbs_nogo(dec, local, 0.0);
    CHECK(rep.residual < 1e-12);
    CHECK(rep.gibbs_stationary);
  }
  SUBCASE("interaction switched on: the Gibbs state fails stationarity") {
    const ComplexMatrix coupling = kron(random_hermitian(2, gen), random_hermitian(3, gen));
    for (double s : {0.5, 1.0}) {
      const ComplexMatrix h = decoupled + s * coupling;
      const auto dec = decompose_hamiltonian(h, dims);
      const JumpSet local = reset_dissipator_jumps(thermal_of((beta * dec.h_a).eval()), 1.0);
      const auto rep = gibbs_nogo(dec, local, beta);
      CHECK(rep.residual > 1e-4);
      CHECK_FALSE(rep.gibbs_stationary);
      CHECK_FALSE(rep.interaction_zero);

      // Cross-check the residual against the direct equation of motion.
      const ComplexMatrix gibbs = thermal_of((beta * h).eval());
      const ComplexMatrix motion =
          Complex(0, -1) * (h * gibbs - gibbs * h) +
          apply_dissipator(lift_local(local, dims), gibbs);
      CHECK(rep.residual == doctest::Approx(motion.norm()).epsilon(1e-8));
    }
  }
  SUBCASE("non-ergodic boundary dissipator is rejected") {
    JumpSet dephasing = empty_jump_set(2);
    dephasing.jumps.push_back(sigma_z());
    const auto dec = decompose_hamiltonian(decoupled, dims);
    CHECK_THROWS_AS(gibbs_nogo(dec, dephasing, beta), ValidationError);
  }
}

TEST_CASE("stationary analysis of a random ergodic system is internally consistent") {
  auto gen = rng(36);
  const CompositeDims dims{2, 2};
  const ComplexMatrix h = random_hermitian(4, gen);
  const JumpSet jumps = lift_local(reset_dissipator_jumps(random_pd_density(2, gen), 1.0), dims);
  const Liouvillian liou = assemble_liouvillian(h, jumps, dims);
  const StationaryAnalysis analysis(liou);

  REQUIRE(analysis.kernel_dimension() == 1);
  const ComplexMatrix rho = analysis.maximal_support_state();
  CHECK(is_density(rho, 1e-9));
  CHECK(apply_superoperator(liou.matrix, rho).norm() < 1e-10);
  const ComplexMatrix p = analysis.projector();
  CHECK((p * p - p).norm() < 1e-9);
  CHECK((liou.matrix * p).norm() < 1e-9 * liou.matrix.norm());
  CHECK((p * liou.matrix).norm() < 1e-9 * liou.matrix.norm());
}
