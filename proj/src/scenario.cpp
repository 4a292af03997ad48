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

#include "lindbladlab/scenario.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lindbladlab/lindblad.hpp"
#include "lindbladlab/matrix_io.hpp"
#include "lindbladlab/spin_chain.hpp"
#include "lindbladlab/steady_state.hpp"
#include "lindbladlab/uniqueness.hpp"

namespace lindbladlab {

using nlohmann::json;

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::SteadyState: return "steady-state";
    case ScenarioKind::Uniqueness: return "uniqueness";
    case ScenarioKind::NoGo: return "no-go";
    case ScenarioKind::Decompose: return "decompose";
    case ScenarioKind::Chain: return "chain";
    case ScenarioKind::Sweep: return "sweep";
  }
  throw ValidationError("unknown scenario kind");
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
  if (name == "steady-state") return ScenarioKind::SteadyState;
  if (name == "uniqueness") return ScenarioKind::Uniqueness;
  if (name == "no-go") return ScenarioKind::NoGo;
  if (name == "decompose") return ScenarioKind::Decompose;
  if (name == "chain") return ScenarioKind::Chain;
  if (name == "sweep") return ScenarioKind::Sweep;
  throw ValidationError("unknown scenario '" + name +
                        "' (expected steady-state, uniqueness, no-go, decompose, chain, sweep)");
}

void ToleranceMap::set(const std::string& name, double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw ValidationError("tolerance '" + name + "' must be positive and finite");
  if (name == "stationarity") stationarity = value;
  else if (name == "rank") rank = value;
  else if (name == "product") product = value;
  else if (name == "gibbs") gibbs = value;
  else
    throw ValidationError("unknown tolerance '" + name +
                          "' (expected stationarity, rank, product, gibbs)");
}

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& message) {
  throw ValidationError("config: field '" + path + "' " + message);
}

const json& need(const json& j, const std::string& parent, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) field_error(parent.empty() ? key : parent + "." + key, "is missing");
  return *it;
}

double need_number(const json& j, const std::string& parent, const char* key) {
  const json& v = need(j, parent, key);
  if (!v.is_number()) field_error(parent.empty() ? key : parent + "." + key, "must be a number");
  return v.get<double>();
}

Index need_integer(const json& j, const std::string& parent, const char* key) {
  const json& v = need(j, parent, key);
  if (!v.is_number_integer())
    field_error(parent.empty() ? key : parent + "." + key, "must be an integer");
  return v.get<Index>();
}

std::string need_string(const json& j, const std::string& parent, const char* key) {
  const json& v = need(j, parent, key);
  if (!v.is_string()) field_error(parent.empty() ? key : parent + "." + key, "must be a string");
  return v.get<std::string>();
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

ChainSpec parse_chain(const json& j) {
  if (!j.is_object()) field_error("chain", "must be an object");
  ChainSpec spec;
  spec.length = need_integer(j, "chain", "length");
  spec.beta = need_number(j, "chain", "beta");
  spec.epsilon = need_number(j, "chain", "epsilon");
  if (j.contains("epsilon_alt")) spec.epsilon_alt = need_number(j, "chain", "epsilon_alt");
  if (spec.length < 2) field_error("chain.length", "must be at least 2");
  if (!(spec.beta >= 0.0)) field_error("chain.beta", "must be non-negative");
  if (!(spec.epsilon > 0.0)) field_error("chain.epsilon", "must be positive");
  return spec;
}

ExplicitSystem parse_matrices(const json& j, const std::string& base_dir) {
  if (!j.is_object()) field_error("matrices", "must be an object");
  ExplicitSystem sys;
  const json& dims = need(j, "matrices", "dims");
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer())
    field_error("matrices.dims", "must be an array of two integers");
  sys.dims = CompositeDims{dims[0].get<Index>(), dims[1].get<Index>()};
  sys.hamiltonian_path = resolve(base_dir, need_string(j, "matrices", "hamiltonian"));

  const bool has_target = j.contains("reset_target");
  const bool has_jumps = j.contains("jumps");
  if (has_target == has_jumps)
    field_error("matrices", "needs exactly one dissipator source: reset_target or jumps");
  if (has_target) {
    sys.reset_target_path = resolve(base_dir, need_string(j, "matrices", "reset_target"));
    if (j.contains("rate")) sys.rate = need_number(j, "matrices", "rate");
    if (!(sys.rate > 0.0)) field_error("matrices.rate", "must be positive");
  } else {
    const json& jumps = need(j, "matrices", "jumps");
    if (!jumps.is_array() || jumps.empty())
      field_error("matrices.jumps", "must be a non-empty array of file paths");
    for (const json& p : jumps) {
      if (!p.is_string()) field_error("matrices.jumps", "must contain only file paths");
      sys.jump_paths.push_back(resolve(base_dir, p.get<std::string>()));
    }
    if (j.contains("lamb_shift"))
      sys.lamb_shift_path = resolve(base_dir, need_string(j, "matrices", "lamb_shift"));
  }
  if (j.contains("beta")) sys.beta = need_number(j, "matrices", "beta");
  if (!std::isfinite(sys.beta)) field_error("matrices.beta", "must be finite");
  return sys;
}

SweepGrid parse_sweep(const json& j) {
  if (!j.is_object()) field_error("sweep", "must be an object");
  SweepGrid grid;
  auto read = [&](const char* key, auto& out, auto check, const char* what) {
    const json& arr = need(j, "sweep", key);
    if (!arr.is_array() || arr.empty())
      field_error(std::string("sweep.") + key, "must be a non-empty array");
    for (const json& v : arr) {
      if (!v.is_number()) field_error(std::string("sweep.") + key, "must contain numbers");
      const double x = v.get<double>();
      if (!check(x)) field_error(std::string("sweep.") + key, what);
      out.push_back(static_cast<typename std::decay_t<decltype(out)>::value_type>(x));
    }
  };
  read("lengths", grid.lengths, [](double x) { return x >= 2 && x == std::floor(x); },
       "must contain integers >= 2");
  read("betas", grid.betas, [](double x) { return x >= 0.0; }, "must contain values >= 0");
  read("epsilons", grid.epsilons, [](double x) { return x > 0.0; },
       "must contain positive values");
  return grid;
}

}  // namespace

ScenarioConfig parse_config(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ValidationError("config: root must be a JSON object");
  ScenarioConfig config;
  config.scenario = scenario_kind_from_string(need_string(j, "", "scenario"));

  if (j.contains("chain")) config.chain = parse_chain(j.at("chain"));
  if (j.contains("matrices")) config.matrices = parse_matrices(j.at("matrices"), base_dir);
  if (j.contains("sweep")) config.sweep = parse_sweep(j.at("sweep"));

  const int sources = int(config.chain.has_value()) + int(config.matrices.has_value()) +
                      int(config.sweep.has_value());
  if (sources != 1)
    throw ValidationError(
        "config: fields 'chain', 'matrices', 'sweep': exactly one system source is required");

  if (config.scenario == ScenarioKind::Sweep && !config.sweep)
    field_error("sweep", "is required by the sweep scenario");
  if (config.scenario != ScenarioKind::Sweep && config.sweep)
    field_error("sweep", "is only valid with the sweep scenario");
  if (config.scenario == ScenarioKind::Chain && !config.chain)
    field_error("chain", "is required by the chain scenario");

  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0)
      field_error("seed", "must be a non-negative integer");
    config.seed = s.get<std::uint64_t>();
  }
  if (j.contains("output")) config.output = need_string(j, "", "output");
  if (j.contains("tolerances")) {
    const json& tols = j.at("tolerances");
    if (!tols.is_object()) field_error("tolerances", "must be an object");
    for (const auto& [name, value] : tols.items()) {
      if (!value.is_number()) field_error("tolerances." + name, "must be a number");
      config.tolerances.set(name, value.get<double>());
    }
  }
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("load_config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("load_config: '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j, std::filesystem::path(path).parent_path().string());
}

MatrixPayload to_payload(const ComplexMatrix& m) {
  MatrixPayload p;
  p.rows = m.rows();
  p.cols = m.cols();
  p.re.reserve(static_cast<std::size_t>(m.size()));
  p.im.reserve(static_cast<std::size_t>(m.size()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      p.re.push_back(m(i, j).real());
      p.im.push_back(m(i, j).imag());
    }
  return p;
}

ComplexMatrix from_payload(const MatrixPayload& p) {
  if (p.rows < 0 || p.cols < 0 ||
      p.re.size() != static_cast<std::size_t>(p.rows * p.cols) || p.im.size() != p.re.size())
    throw ValidationError("matrix payload: inconsistent shape");
  ComplexMatrix m(p.rows, p.cols);
  std::size_t k = 0;
  for (Index j = 0; j < p.cols; ++j)
    for (Index i = 0; i < p.rows; ++i, ++k) m(i, j) = Complex(p.re[k], p.im[k]);
  return m;
}

namespace {

json payload_to_json(const MatrixPayload& p) {
  return json{{"rows", p.rows}, {"cols", p.cols}, {"re", p.re}, {"im", p.im}};
}

MatrixPayload payload_from_json(const json& j) {
  MatrixPayload p;
  p.rows = j.at("rows").get<Index>();
  p.cols = j.at("cols").get<Index>();
  p.re = j.at("re").get<std::vector<double>>();
  p.im = j.at("im").get<std::vector<double>>();
  return p;
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const AnalysisReport& r) {
  j = json::object();
  j["schema_version"] = r.schema_version;
  j["scenario"] = r.scenario;
  j["seed"] = r.seed;
  put_optional(j, "stationary_dimension", r.stationary_dimension);
  if (r.maximal_support_state)
    j["maximal_support_state"] = payload_to_json(*r.maximal_support_state);
  put_optional(j, "product_residual", r.product_residual);
  put_optional(j, "product_target_mismatch", r.product_target_mismatch);
  {
    json v = json::object();
    put_optional(v, "frigerio", r.verdicts.frigerio);
    put_optional(v, "bulk", r.verdicts.bulk);
    put_optional(v, "closure", r.verdicts.closure);
    if (!v.empty()) j["verdicts"] = v;
  }
  put_optional(j, "frigerio_commutant_dimension", r.frigerio_commutant_dimension);
  put_optional(j, "closure_dimension", r.closure_dimension);
  if (r.factor_commutation) {
    const FactorCommutationPayload& f = *r.factor_commutation;
    j["factor_commutation"] = json{{"boundary", f.boundary},
                                   {"bulk", f.bulk},
                                   {"interaction", f.interaction},
                                   {"preconditions_met", f.preconditions_met}};
  }
  put_optional(j, "gibbs_residual", r.gibbs_residual);
  put_optional(j, "gibbs_stationary", r.gibbs_stationary);
  put_optional(j, "interaction_zero", r.interaction_zero);
  put_optional(j, "boundary_marginal_mismatch", r.boundary_marginal_mismatch);
  put_optional(j, "decomposition_blocks", r.decomposition_blocks);
  if (r.chain) {
    const ChainPayload& c = *r.chain;
    j["chain"] = json{{"length", c.length},
                      {"beta", c.beta},
                      {"epsilon", c.epsilon},
                      {"epsilon_alt", c.epsilon_alt},
                      {"stationarity_residual", c.stationarity_residual},
                      {"state_mismatch", c.state_mismatch},
                      {"epsilon_agreement", c.epsilon_agreement},
                      {"stationary_ok", c.stationary_ok},
                      {"state_match_ok", c.state_match_ok},
                      {"unique_ok", c.unique_ok},
                      {"epsilon_independent_ok", c.epsilon_independent_ok},
                      {"gibbs_verdict_ok", c.gibbs_verdict_ok},
                      {"passed", c.passed}};
  }
  if (r.decomposition) {
    const DecompositionPayload& d = *r.decomposition;
    j["decomposition"] = json{{"h_a", payload_to_json(d.h_a)},
                              {"h_b", payload_to_json(d.h_b)},
                              {"h_ab", payload_to_json(d.h_ab)},
                              {"boundary_norm", d.boundary_norm},
                              {"bulk_norm", d.bulk_norm},
                              {"interaction_norm", d.interaction_norm},
                              {"reassembly_residual", d.reassembly_residual},
                              {"partial_trace_residual", d.partial_trace_residual}};
  }
  if (!r.points.empty()) j["points"] = r.points;
  j["timings_ms"] = r.timings_ms;
}

void from_json(const json& j, AnalysisReport& r) {
  r = AnalysisReport{};
  r.schema_version = j.at("schema_version").get<std::string>();
  r.scenario = j.at("scenario").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  get_optional(j, "stationary_dimension", r.stationary_dimension);
  if (j.contains("maximal_support_state"))
    r.maximal_support_state = payload_from_json(j.at("maximal_support_state"));
  get_optional(j, "product_residual", r.product_residual);
  get_optional(j, "product_target_mismatch", r.product_target_mismatch);
  if (j.contains("verdicts")) {
    const json& v = j.at("verdicts");
    get_optional(v, "frigerio", r.verdicts.frigerio);
    get_optional(v, "bulk", r.verdicts.bulk);
    get_optional(v, "closure", r.verdicts.closure);
  }
  get_optional(j, "frigerio_commutant_dimension", r.frigerio_commutant_dimension);
  get_optional(j, "closure_dimension", r.closure_dimension);
  if (j.contains("factor_commutation")) {
    const json& f = j.at("factor_commutation");
    FactorCommutationPayload p;
    p.boundary = f.at("boundary").get<double>();
    p.bulk = f.at("bulk").get<double>();
    p.interaction = f.at("interaction").get<double>();
    p.preconditions_met = f.at("preconditions_met").get<bool>();
    r.factor_commutation = p;
  }
  get_optional(j, "gibbs_residual", r.gibbs_residual);
  get_optional(j, "gibbs_stationary", r.gibbs_stationary);
  get_optional(j, "interaction_zero", r.interaction_zero);
  get_optional(j, "boundary_marginal_mismatch", r.boundary_marginal_mismatch);
  get_optional(j, "decomposition_blocks", r.decomposition_blocks);
  if (j.contains("chain")) {
    const json& c = j.at("chain");
    ChainPayload p;
    p.length = c.at("length").get<Index>();
    p.beta = c.at("beta").get<double>();
    p.epsilon = c.at("epsilon").get<double>();
    p.epsilon_alt = c.at("epsilon_alt").get<double>();
    p.stationarity_residual = c.at("stationarity_residual").get<double>();
    p.state_mismatch = c.at("state_mismatch").get<double>();
    p.epsilon_agreement = c.at("epsilon_agreement").get<double>();
    p.stationary_ok = c.at("stationary_ok").get<bool>();
    p.state_match_ok = c.at("state_match_ok").get<bool>();
    p.unique_ok = c.at("unique_ok").get<bool>();
    p.epsilon_independent_ok = c.at("epsilon_independent_ok").get<bool>();
    p.gibbs_verdict_ok = c.at("gibbs_verdict_ok").get<bool>();
    p.passed = c.at("passed").get<bool>();
    r.chain = p;
  }
  if (j.contains("decomposition")) {
    const json& d = j.at("decomposition");
    DecompositionPayload p;
    p.h_a = payload_from_json(d.at("h_a"));
    p.h_b = payload_from_json(d.at("h_b"));
    p.h_ab = payload_from_json(d.at("h_ab"));
    p.boundary_norm = d.at("boundary_norm").get<double>();
    p.bulk_norm = d.at("bulk_norm").get<double>();
    p.interaction_norm = d.at("interaction_norm").get<double>();
    p.reassembly_residual = d.at("reassembly_residual").get<double>();
    p.partial_trace_residual = d.at("partial_trace_residual").get<double>();
    r.decomposition = p;
  }
  if (j.contains("points")) r.points = j.at("points").get<std::vector<AnalysisReport>>();
  if (j.contains("timings_ms"))
    r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
}

namespace {

std::string verdict_string(UniquenessVerdict v) {
  switch (v) {
    case UniquenessVerdict::Unique: return "unique";
    case UniquenessVerdict::NotUnique: return "not_unique";
    case UniquenessVerdict::Inapplicable: return "inapplicable";
  }
  throw NumericalError("unknown uniqueness verdict");
}

std::string verdict_string(BulkUniquenessVerdict v) {
  switch (v) {
    case BulkUniquenessVerdict::UniquePositiveDefinite: return "unique_positive_definite";
    case BulkUniquenessVerdict::NotUnique: return "not_unique";
    case BulkUniquenessVerdict::Inapplicable: return "inapplicable";
  }
  throw NumericalError("unknown bulk uniqueness verdict");
}

std::string verdict_string(ClosureVerdict v) {
  return v == ClosureVerdict::UniqueSufficient ? "unique_sufficient" : "inconclusive";
}

class Stopwatch {
 public:
  explicit Stopwatch(std::map<std::string, double>& sink) : sink_(sink) {}
  template <typename F>
  auto time(const std::string& label, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      sink_[label] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto result = f();
      finish();
      return result;
    }
  }

 private:
  std::map<std::string, double>& sink_;
};

struct BuiltSystem {
  HamiltonianDecomposition hdec;
  JumpSet local;
  ComplexMatrix reset_target;  // empty when the dissipator came as raw jumps
  double beta = 1.0;
};

BuiltSystem build_explicit(const ExplicitSystem& sys) {
  check_dims(sys.dims);
  BuiltSystem built;
  built.beta = sys.beta;
  const ComplexMatrix h = load_matrix(sys.hamiltonian_path);
  built.hdec = decompose_hamiltonian(h, sys.dims);
  if (!sys.reset_target_path.empty()) {
    built.reset_target = load_matrix(sys.reset_target_path);
    built.local = reset_dissipator_jumps(built.reset_target, sys.rate);
  } else {
    built.local = empty_jump_set(sys.dims.dim_a);
    if (!sys.lamb_shift_path.empty()) {
      built.local.lamb_shift = load_matrix(sys.lamb_shift_path);
      if (built.local.lamb_shift.rows() != sys.dims.dim_a ||
          !is_hermitian(built.local.lamb_shift, 1e-10))
        throw ValidationError("config: matrices.lamb_shift must be hermitian on dim_a");
    }
    for (const std::string& path : sys.jump_paths) {
      ComplexMatrix l = load_matrix(path);
      if (l.rows() != sys.dims.dim_a || l.cols() != sys.dims.dim_a)
        throw ValidationError("config: matrices.jumps entries must be dim_a x dim_a (got '" +
                              path + "')");
      built.local.jumps.push_back(std::move(l));
    }
  }
  return built;
}

AnalysisReport run_chain_point(Index length, double beta, double epsilon, double epsilon_alt,
                               std::uint64_t seed) {
  AnalysisReport rep;
  rep.scenario = to_string(ScenarioKind::Chain);
  rep.seed = seed;
  Stopwatch watch(rep.timings_ms);
  const ChainReproduction rr = watch.time("chain", [&] {
    return reproduce_chain_analysis(length, beta, epsilon, epsilon_alt);
  });

  rep.stationary_dimension = rr.stationary_dimension;
  rep.maximal_support_state = to_payload(rr.steady_state);
  rep.verdicts.frigerio = verdict_string(rr.frigerio.verdict);
  rep.verdicts.bulk = verdict_string(rr.bulk.verdict);
  rep.verdicts.closure = verdict_string(rr.closure.verdict);
  rep.frigerio_commutant_dimension = rr.frigerio.commutant_dimension;
  rep.closure_dimension = rr.closure.closure_dimension;
  rep.factor_commutation =
      FactorCommutationPayload{rr.factor_commutation.boundary_residual,
                               rr.factor_commutation.bulk_residual,
                               rr.factor_commutation.interaction_residual,
                               rr.factor_commutation.preconditions_met};
  rep.gibbs_residual = rr.gibbs.residual;
  rep.gibbs_stationary = rr.gibbs.gibbs_stationary;
  rep.interaction_zero = rr.gibbs.interaction_zero;
  rep.boundary_marginal_mismatch = rr.gibbs.boundary_marginal_mismatch;

  ChainPayload chain;
  chain.length = rr.length;
  chain.beta = rr.beta;
  chain.epsilon = rr.epsilon;
  chain.epsilon_alt = rr.epsilon_alt;
  chain.stationarity_residual = rr.stationarity_residual;
  chain.state_mismatch = rr.state_mismatch;
  chain.epsilon_agreement = rr.epsilon_agreement;
  chain.stationary_ok = rr.stationary_ok;
  chain.state_match_ok = rr.state_match_ok;
  chain.unique_ok = rr.unique_ok;
  chain.epsilon_independent_ok = rr.epsilon_independent_ok;
  chain.gibbs_verdict_ok = rr.gibbs_verdict_ok;
  chain.passed = rr.passed;
  rep.chain = chain;
  return rep;
}

}  // namespace

AnalysisReport run_scenario(const ScenarioConfig& config) {
  AnalysisReport rep;
  rep.scenario = to_string(config.scenario);
  rep.seed = config.seed;
  Stopwatch watch(rep.timings_ms);
  const auto total_start = std::chrono::steady_clock::now();

  switch (config.scenario) {
    case ScenarioKind::Chain: {
      const ChainSpec& c = *config.chain;
      rep = run_chain_point(c.length, c.beta, c.epsilon, c.epsilon_alt, config.seed);
      break;
    }

    case ScenarioKind::Sweep: {
      const SweepGrid& grid = *config.sweep;
      for (const Index length : grid.lengths)
        for (const double beta : grid.betas)
          for (const double epsilon : grid.epsilons)
            rep.points.push_back(
                run_chain_point(length, beta, epsilon, 0.0, config.seed));
      break;
    }

    case ScenarioKind::SteadyState: {
      BuiltSystem built;
      CompositeDims dims;
      ComplexMatrix target;
      if (config.chain) {
        const ChainSpec& c = *config.chain;
        const ChainModel model = boundary_reset_model(c.length, c.beta, c.epsilon);
        built.hdec = decompose_hamiltonian(model.hamiltonian, model.dims);
        built.local = model.local_jumps;
        built.reset_target = model.rho_hat_a;
      } else {
        built = build_explicit(*config.matrices);
      }
      dims = built.hdec.dims;
      const Liouvillian liou = watch.time("assemble", [&] {
        return assemble_liouvillian(built.hdec, lift_local(built.local, dims));
      });
      const StationaryAnalysis analysis = watch.time("stationary", [&] {
        return StationaryAnalysis(liou, config.tolerances.rank, config.seed);
      });
      rep.stationary_dimension = analysis.kernel_dimension();
      const ComplexMatrix rho = analysis.maximal_support_state();
      rep.maximal_support_state = to_payload(rho);
      ComplexMatrix target_a = built.reset_target;
      if (target_a.size() == 0) {
        try {
          target_a = ergodic_steady_state(built.local);
        } catch (const ValidationError&) {
          target_a = ComplexMatrix();  // no unique boundary target to compare against
        }
      }
      if (target_a.size() != 0) {
        const ProductFactorization pf =
            product_factor_check(rho, dims, target_a, config.tolerances.product);
        rep.product_residual = pf.residual;
        rep.product_target_mismatch = pf.target_mismatch;
      }
      const FactorCommutationDiagnostics diag = factor_commutation_diagnostics(rho, built.hdec);
      rep.factor_commutation =
          FactorCommutationPayload{diag.boundary_residual, diag.bulk_residual,
                                   diag.interaction_residual, diag.preconditions_met};
      break;
    }

    case ScenarioKind::Uniqueness: {
      BuiltSystem built;
      if (config.chain) {
        const ChainSpec& c = *config.chain;
        const ChainModel model = boundary_reset_model(c.length, c.beta, c.epsilon);
        built.hdec = decompose_hamiltonian(model.hamiltonian, model.dims);
        built.local = model.local_jumps;
      } else {
        built = build_explicit(*config.matrices);
      }
      const Liouvillian liou = watch.time("assemble", [&] {
        return assemble_liouvillian(built.hdec, lift_local(built.local, built.hdec.dims));
      });
      const FrigerioReport fr =
          watch.time("frigerio", [&] { return frigerio_uniqueness(liou); });
      const BulkUniquenessReport bu = watch.time("bulk", [&] {
        return bulk_uniqueness_verdict(built.hdec, built.local);
      });
      const ClosureReport cl = watch.time("closure", [&] { return yoshida_check(liou); });
      rep.verdicts.frigerio = verdict_string(fr.verdict);
      rep.verdicts.bulk = verdict_string(bu.verdict);
      rep.verdicts.closure = verdict_string(cl.verdict);
      rep.frigerio_commutant_dimension = fr.commutant_dimension;
      rep.closure_dimension = cl.closure_dimension;
      const StationaryAnalysis analysis(liou, config.tolerances.rank, config.seed);
      rep.stationary_dimension = analysis.kernel_dimension();
      const ErgodicDecomposition dec = watch.time("decomposition", [&] {
        return ergodic_decomposition(liou, config.seed);
      });
      rep.decomposition_blocks = static_cast<Index>(dec.center_projections.size());
      break;
    }

    case ScenarioKind::NoGo: {
      BuiltSystem built;
      double beta = 1.0;
      if (config.chain) {
        const ChainSpec& c = *config.chain;
        const ChainModel model = boundary_reset_model(c.length, c.beta, c.epsilon);
        built.hdec = decompose_hamiltonian(model.hamiltonian, model.dims);
        built.local = model.local_jumps;
        beta = c.beta;
      } else {
        built = build_explicit(*config.matrices);
        beta = built.beta;
      }
      const GibbsNogoReport gr = watch.time("gibbs", [&] {
        return gibbs_nogo(built.hdec, built.local, beta, config.tolerances.gibbs);
      });
      rep.gibbs_residual = gr.residual;
      rep.gibbs_stationary = gr.gibbs_stationary;
      rep.interaction_zero = gr.interaction_zero;
      rep.boundary_marginal_mismatch = gr.boundary_marginal_mismatch;
      break;
    }

    case ScenarioKind::Decompose: {
      if (!config.matrices)
        throw ValidationError("config: the decompose scenario requires explicit matrices");
      const ExplicitSystem& sys = *config.matrices;
      const ComplexMatrix h = load_matrix(sys.hamiltonian_path);
      const HamiltonianDecomposition dec = watch.time("decompose", [&] {
        return decompose_hamiltonian(h, sys.dims);
      });
      DecompositionPayload payload;
      payload.h_a = to_payload(dec.h_a);
      payload.h_b = to_payload(dec.h_b);
      payload.h_ab = to_payload(dec.h_ab);
      payload.boundary_norm = dec.h_a.norm();
      payload.bulk_norm = dec.h_b.norm();
      payload.interaction_norm = dec.h_ab.norm();
      const ComplexMatrix eye_a = ComplexMatrix::Identity(sys.dims.dim_a, sys.dims.dim_a);
      const ComplexMatrix eye_b = ComplexMatrix::Identity(sys.dims.dim_b, sys.dims.dim_b);
      payload.reassembly_residual =
          (dec.h_total - kron(dec.h_a, eye_b) - kron(eye_a, dec.h_b) - dec.h_ab).norm();
      payload.partial_trace_residual =
          std::max(partial_trace(dec.h_ab, sys.dims, Subsystem::A).norm(),
                   partial_trace(dec.h_ab, sys.dims, Subsystem::B).norm());
      rep.decomposition = payload;
      break;
    }
  }

  rep.timings_ms["total"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - total_start)
          .count();
  return rep;
}

bool any_inapplicable(const AnalysisReport& report) {
  const auto bad = [](const std::optional<std::string>& v) {
    return v && *v == "inapplicable";
  };
  if (bad(report.verdicts.frigerio) || bad(report.verdicts.bulk)) return true;
  for (const AnalysisReport& p : report.points)
    if (any_inapplicable(p)) return true;
  return false;
}

std::string summarize(const AnalysisReport& report) {
  std::ostringstream out;
  out << "scenario: " << report.scenario << "\n";
  if (report.stationary_dimension)
    out << "stationary dimension: " << *report.stationary_dimension << "\n";
  if (report.verdicts.frigerio) out << "frigerio: " << *report.verdicts.frigerio << "\n";
  if (report.verdicts.bulk) out << "bulk commutant: " << *report.verdicts.bulk << "\n";
  if (report.verdicts.closure) out << "closure: " << *report.verdicts.closure << "\n";
  if (report.product_residual) out << "product residual: " << *report.product_residual << "\n";
  if (report.gibbs_residual)
    out << "gibbs residual: " << *report.gibbs_residual
        << (report.gibbs_stationary && *report.gibbs_stationary ? " (stationary)"
                                                                : " (not stationary)")
        << "\n";
  if (report.decomposition_blocks)
    out << "decomposition blocks: " << *report.decomposition_blocks << "\n";
  if (report.decomposition)
    out << "interaction norm: " << report.decomposition->interaction_norm << "\n";
  if (report.chain)
    out << "chain reproduction " << (report.chain->passed ? "passed" : "FAILED") << " (l="
        << report.chain->length << ", beta=" << report.chain->beta
        << ", epsilon=" << report.chain->epsilon << ")\n";
  if (!report.points.empty()) {
    Index passed = 0;
    for (const AnalysisReport& p : report.points)
      if (p.chain && p.chain->passed) ++passed;
    out << "sweep: " << passed << "/" << report.points.size() << " points passed\n";
  }
  return out.str();
}

}  // namespace lindbladlab
