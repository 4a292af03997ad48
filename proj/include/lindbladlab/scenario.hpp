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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lindbladlab/core.hpp"

namespace lindbladlab {

inline constexpr const char* kReportSchemaVersion = "lindbladlab-report-1";

enum class ScenarioKind { SteadyState, Uniqueness, NoGo, Decompose, Chain, Sweep };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

/// Named tolerances the CLI can override with --tol name=value.
struct ToleranceMap {
  double stationarity = defaults::stationarity_tol;
  double rank = defaults::rank_tol;
  double product = defaults::density_tol;
  double gibbs = defaults::projector_tol;

  void set(const std::string& name, double value);
  bool operator==(const ToleranceMap&) const = default;
};

struct ChainSpec {
  Index length = 0;
  double beta = 0.0;
  double epsilon = 0.0;
  double epsilon_alt = 0.0;  // 0 selects the default alternative rate
  bool operator==(const ChainSpec&) const = default;
};

/// Explicit system from matrix files: a Hamiltonian on the composite space
/// plus a boundary dissipator, given either as a reset target with a rate or
/// as explicit boundary jumps (with an optional boundary lamb shift).
struct ExplicitSystem {
  CompositeDims dims;
  std::string hamiltonian_path;
  std::string reset_target_path;  // exclusive with jump_paths
  double rate = 1.0;
  std::vector<std::string> jump_paths;
  std::string lamb_shift_path;
  double beta = 1.0;  // inverse temperature probed by the no-go scenario
};

struct SweepGrid {
  std::vector<Index> lengths;
  std::vector<double> betas;
  std::vector<double> epsilons;
  bool operator==(const SweepGrid&) const = default;
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::SteadyState;
  std::optional<ChainSpec> chain;
  std::optional<ExplicitSystem> matrices;
  std::optional<SweepGrid> sweep;
  ToleranceMap tolerances;
  std::uint64_t seed = 0;
  std::string output;  // empty: write the report to stdout
};

/// Parse and validate a configuration. Matrix paths are resolved relative to
/// base_dir (the config file's directory). Errors name the offending field.
ScenarioConfig parse_config(const nlohmann::json& j, const std::string& base_dir = ".");
ScenarioConfig load_config(const std::string& path);

struct MatrixPayload {
  Index rows = 0;
  Index cols = 0;
  std::vector<double> re;
  std::vector<double> im;
  bool operator==(const MatrixPayload&) const = default;
};
MatrixPayload to_payload(const ComplexMatrix& m);
ComplexMatrix from_payload(const MatrixPayload& p);

struct VerdictSet {
  std::optional<std::string> frigerio;
  std::optional<std::string> bulk;
  std::optional<std::string> closure;
  bool operator==(const VerdictSet&) const = default;
};

struct FactorCommutationPayload {
  double boundary = 0.0;
  double bulk = 0.0;
  double interaction = 0.0;
  bool preconditions_met = false;
  bool operator==(const FactorCommutationPayload&) const = default;
};

struct ChainPayload {
  Index length = 0;
  double beta = 0.0;
  double epsilon = 0.0;
  double epsilon_alt = 0.0;
  double stationarity_residual = 0.0;
  double state_mismatch = 0.0;
  double epsilon_agreement = 0.0;
  bool stationary_ok = false;
  bool state_match_ok = false;
  bool unique_ok = false;
  bool epsilon_independent_ok = false;
  bool gibbs_verdict_ok = false;
  bool passed = false;
  bool operator==(const ChainPayload&) const = default;
};

struct DecompositionPayload {
  MatrixPayload h_a;
  MatrixPayload h_b;
  MatrixPayload h_ab;
  double boundary_norm = 0.0;
  double bulk_norm = 0.0;
  double interaction_norm = 0.0;
  double reassembly_residual = 0.0;
  double partial_trace_residual = 0.0;
  bool operator==(const DecompositionPayload&) const = default;
};

/// Machine-readable result of one scenario run. Serializes to JSON and back
/// without loss; absent analyses stay absent rather than defaulted.
struct AnalysisReport {
  std::string schema_version = kReportSchemaVersion;
  std::string scenario;
  std::uint64_t seed = 0;
  std::optional<Index> stationary_dimension;
  std::optional<MatrixPayload> maximal_support_state;
  std::optional<double> product_residual;
  std::optional<double> product_target_mismatch;
  VerdictSet verdicts;
  std::optional<Index> frigerio_commutant_dimension;
  std::optional<Index> closure_dimension;
  std::optional<FactorCommutationPayload> factor_commutation;
  std::optional<double> gibbs_residual;
  std::optional<bool> gibbs_stationary;
  std::optional<bool> interaction_zero;
  std::optional<double> boundary_marginal_mismatch;
  std::optional<Index> decomposition_blocks;
  std::optional<ChainPayload> chain;
  std::optional<DecompositionPayload> decomposition;
  std::vector<AnalysisReport> points;  // sweep sub-reports, grid order
  std::map<std::string, double> timings_ms;

  bool operator==(const AnalysisReport&) const = default;
};

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

/// Execute a scenario; deterministic given the config (including seed).
AnalysisReport run_scenario(const ScenarioConfig& config);

/// True when any verdict in the report (or its sweep points) is inapplicable.
bool any_inapplicable(const AnalysisReport& report);

/// Short human-readable digest of a report.
std::string summarize(const AnalysisReport& report);

}  // namespace lindbladlab
