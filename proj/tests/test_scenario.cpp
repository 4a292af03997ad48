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

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lindbladlab/matrix_io.hpp"
#include "lindbladlab/scenario.hpp"
#include "lindbladlab/spin_chain.hpp"
#include "lindbladlab/tensor.hpp"
#include "support/random_models.hpp"

using namespace lindbladlab;
using namespace lindbladlab::testing;
using nlohmann::json;

#ifndef LINDBLADLAB_TEST_DATA_DIR
#error "LINDBLADLAB_TEST_DATA_DIR must point at the committed test data"
#endif

namespace {

std::filesystem::path data_dir() { return std::filesystem::path(LINDBLADLAB_TEST_DATA_DIR); }

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("lindbladlab_" + name);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json chain_config_json() {
  return json{{"scenario", "chain"},
              {"chain", {{"length", 2}, {"beta", 0.6931471805599453}, {"epsilon", 0.5}}},
              {"seed", 7}};
}

}  // namespace

TEST_CASE("parse_config names the offending field") {
  CHECK_THROWS_WITH_AS(parse_config(json::object()), "config: field 'scenario' is missing",
                       ValidationError);

  json bad = chain_config_json();
  bad["chain"]["length"] = 1;
  CHECK_THROWS_WITH_AS(parse_config(bad), "config: field 'chain.length' must be at least 2",
                       ValidationError);

  json two_sources = chain_config_json();
  two_sources["sweep"] = {{"lengths", {2}}, {"betas", {0.5}}, {"epsilons", {1.0}}};
  CHECK_THROWS_WITH_AS(
      parse_config(two_sources),
      doctest::Contains("exactly one system source"), ValidationError);

  json bad_scenario = chain_config_json();
  bad_scenario["scenario"] = "meltdown";
  CHECK_THROWS_WITH_AS(parse_config(bad_scenario), doctest::Contains("unknown scenario"),
                       ValidationError);

  json bad_seed = chain_config_json();
  bad_seed["seed"] = -3;
  CHECK_THROWS_WITH_AS(parse_config(bad_seed), doctest::Contains("seed"), ValidationError);

  json bad_tol = chain_config_json();
  bad_tol["tolerances"] = {{"banana", 1e-9}};
  CHECK_THROWS_WITH_AS(parse_config(bad_tol), doctest::Contains("unknown tolerance"),
                       ValidationError);

  json sweep_mismatch = chain_config_json();
  sweep_mismatch["scenario"] = "sweep";
  CHECK_THROWS_WITH_AS(parse_config(sweep_mismatch), doctest::Contains("sweep"),
                       ValidationError);
}

TEST_CASE("tolerance overrides reject nonsense values") {
  ToleranceMap tols;
  tols.set("stationarity", 1e-6);
  CHECK(tols.stationarity == 1e-6);
  CHECK_THROWS_AS(tols.set("rank", 0.0), ValidationError);
  CHECK_THROWS_AS(tols.set("rank", -1e-9), ValidationError);
}

TEST_CASE("matrix text format round-trips bit-exactly") {
  auto gen = rng(61);
  const ComplexMatrix m = random_matrix(3, 2, gen);
  const std::string text = format_matrix(m);
  const ComplexMatrix back = parse_matrix(text);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 2);
  CHECK((back - m).norm() == 0.0);  // 17 significant digits reproduce doubles exactly
  CHECK(format_matrix(back) == text);

  const auto dir = scratch_dir("matrix_io");
  const auto path = (dir / "roundtrip.txt").string();
  save_matrix(path, m);
  CHECK((load_matrix(path) - m).norm() == 0.0);
}

TEST_CASE("matrix parser reports positions and trailing garbage") {
  CHECK_THROWS_WITH_AS(parse_matrix("2 2\n1 0 2 0\n1 0", "cfg"), doctest::Contains("cfg:3"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_matrix("1 1\n1 0\nextra", "cfg"), doctest::Contains("trailing"),
                       ValidationError);
  CHECK_THROWS_AS(parse_matrix("-1 2\n", "cfg"), ValidationError);
  CHECK_THROWS_AS(parse_matrix("", "cfg"), ValidationError);
  CHECK_THROWS_AS(load_matrix("/nonexistent/matrix.txt"), ValidationError);
}

TEST_CASE("committed matrix file stays loadable and byte-stable") {
  const auto path = data_dir() / "golden_matrix.txt";
  const ComplexMatrix m = load_matrix(path.string());
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  // Re-serializing the loaded matrix reproduces the committed bytes.
  CHECK(format_matrix(m) == slurp(path));
  // The file holds the thermal qubit state diag(2/3, 1/3).
  CHECK(m(0, 0).real() == doctest::Approx(2.0 / 3.0));
  CHECK(m(1, 1).real() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("payload conversion preserves every entry") {
  auto gen = rng(62);
  const ComplexMatrix m = random_matrix(4, 3, gen);
  CHECK((from_payload(to_payload(m)) - m).norm() == 0.0);

  MatrixPayload broken = to_payload(m);
  broken.re.pop_back();
  CHECK_THROWS_AS(from_payload(broken), ValidationError);
}

TEST_CASE("analysis reports serialize to JSON and back without loss") {
  AnalysisReport rep;
  rep.scenario = "chain";
  rep.seed = 11;
  rep.stationary_dimension = 1;
  rep.maximal_support_state = to_payload(analytic_steady_state(2, 0.5));
  rep.product_residual = 1.5e-12;
  rep.verdicts.frigerio = "unique";
  rep.verdicts.closure = "inconclusive";
  rep.closure_dimension = 16;
  rep.gibbs_residual = 0.25;
  rep.gibbs_stationary = false;
  ChainPayload chain;
  chain.length = 2;
  chain.beta = 0.5;
  chain.passed = true;
  rep.chain = chain;
  rep.timings_ms["total"] = 12.5;
  AnalysisReport point;
  point.scenario = "chain";
  rep.points.push_back(point);

  json j = rep;
  const AnalysisReport back = j.get<AnalysisReport>();
  CHECK(back == rep);

  // Absent optionals stay absent keys rather than serializing as defaults.
  CHECK_FALSE(j.contains("decomposition"));
  CHECK_FALSE(j.contains("product_target_mismatch"));
  CHECK(j.at("schema_version").get<std::string>() == kReportSchemaVersion);

  const AnalysisReport empty;
  json je = empty;
  CHECK(je.get<AnalysisReport>() == empty);
}

TEST_CASE("chain scenario runs are deterministic") {
  const ScenarioConfig config = parse_config(chain_config_json());
  AnalysisReport a = run_scenario(config);
  AnalysisReport b = run_scenario(config);
  a.timings_ms.clear();
  b.timings_ms.clear();
  CHECK(a == b);
  REQUIRE(a.chain.has_value());
  CHECK(a.chain->passed);
  CHECK(a.scenario == "chain");
  CHECK_FALSE(any_inapplicable(a));
  CHECK_FALSE(summarize(a).empty());
}

TEST_CASE("chain scenario matches the committed golden report") {
  const ScenarioConfig config =
      load_config((data_dir() / "chain_config.json").string());
  AnalysisReport fresh = run_scenario(config);

  const json golden_json = json::parse(slurp(data_dir() / "golden_chain_report.json"));
  AnalysisReport golden = golden_json.get<AnalysisReport>();

  fresh.timings_ms.clear();
  golden.timings_ms.clear();
  CHECK(fresh == golden);
}

TEST_CASE("explicit-system scenarios run from matrix files") {
  const auto dir = scratch_dir("explicit_scenario");
  const ChainModel model = boundary_reset_model(2, 0.6931471805599453, 0.5);
  save_matrix((dir / "h.txt").string(), model.hamiltonian);
  save_matrix((dir / "target.txt").string(), model.rho_hat_a);

  json base = {{"scenario", "steady-state"},
               {"matrices",
                {{"dims", {2, 2}},
                 {"hamiltonian", "h.txt"},
                 {"reset_target", "target.txt"},
                 {"rate", 0.5},
                 {"beta", 0.6931471805599453}}}};

  SUBCASE("steady-state: the chain closed form appears as the product state") {
    const ScenarioConfig config = parse_config(base, dir.string());
    const AnalysisReport rep = run_scenario(config);
    REQUIRE(rep.stationary_dimension.has_value());
    CHECK(*rep.stationary_dimension == 1);
    REQUIRE(rep.maximal_support_state.has_value());
    const ComplexMatrix state = from_payload(*rep.maximal_support_state);
    CHECK((state - analytic_steady_state(2, 0.6931471805599453)).norm() < 1e-9);
    REQUIRE(rep.product_residual.has_value());
    CHECK(*rep.product_residual < 1e-9);
    REQUIRE(rep.product_target_mismatch.has_value());
    CHECK(*rep.product_target_mismatch < 1e-9);
  }
  SUBCASE("uniqueness: all three verdicts and the block count") {
    json cfg = base;
    cfg["scenario"] = "uniqueness";
    const AnalysisReport rep = run_scenario(parse_config(cfg, dir.string()));
    CHECK(rep.verdicts.frigerio == "unique");
    CHECK(rep.verdicts.bulk == "unique_positive_definite");
    CHECK(rep.verdicts.closure == "unique_sufficient");
    REQUIRE(rep.closure_dimension.has_value());
    CHECK(*rep.closure_dimension == 16);
    REQUIRE(rep.decomposition_blocks.has_value());
    CHECK(*rep.decomposition_blocks == 1);
    CHECK_FALSE(any_inapplicable(rep));
  }
  SUBCASE("no-go: the coupled Gibbs state is not stationary") {
    json cfg = base;
    cfg["scenario"] = "no-go";
    const AnalysisReport rep = run_scenario(parse_config(cfg, dir.string()));
    REQUIRE(rep.gibbs_residual.has_value());
    CHECK(*rep.gibbs_residual > 1e-3);
    REQUIRE(rep.gibbs_stationary.has_value());
    CHECK_FALSE(*rep.gibbs_stationary);
    REQUIRE(rep.interaction_zero.has_value());
    CHECK_FALSE(*rep.interaction_zero);
  }
  SUBCASE("decompose: parts reassemble to the Hamiltonian") {
    json cfg = base;
    cfg["scenario"] = "decompose";
    const AnalysisReport rep = run_scenario(parse_config(cfg, dir.string()));
    REQUIRE(rep.decomposition.has_value());
    const auto& dec = *rep.decomposition;
    CHECK(dec.reassembly_residual < 1e-12);
    CHECK(dec.partial_trace_residual < 1e-12);
    const ComplexMatrix rebuilt =
        kron(from_payload(dec.h_a), ComplexMatrix::Identity(2, 2)) +
        kron(ComplexMatrix::Identity(2, 2), from_payload(dec.h_b)) + from_payload(dec.h_ab);
    CHECK((rebuilt - model.hamiltonian).norm() < 1e-12);
  }
  SUBCASE("explicit jump operators work in place of a reset target") {
    json cfg = base;
    cfg["scenario"] = "uniqueness";
    cfg["matrices"].erase("reset_target");
    cfg["matrices"].erase("rate");
    // The dissipator as explicit boundary jumps: thermal reset at rate 1/2.
    const JumpSet local = reset_dissipator_jumps(model.rho_hat_a, 0.5);
    json paths = json::array();
    for (std::size_t k = 0; k < local.jumps.size(); ++k) {
      const std::string name = "jump" + std::to_string(k) + ".txt";
      save_matrix((dir / name).string(), local.jumps[k]);
      paths.push_back(name);
    }
    cfg["matrices"]["jumps"] = paths;
    const AnalysisReport rep = run_scenario(parse_config(cfg, dir.string()));
    CHECK(rep.verdicts.frigerio == "unique");
    CHECK(rep.verdicts.bulk == "unique_positive_definite");
  }
}

TEST_CASE("sweep scenario visits the whole grid in order") {
  json cfg = {{"scenario", "sweep"},
              {"sweep",
               {{"lengths", {2}}, {"betas", {0.5, 1.0}}, {"epsilons", {0.5}}}},
              {"seed", 3}};
  const AnalysisReport rep = run_scenario(parse_config(cfg));
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].chain->beta == 0.5);
  CHECK(rep.points[1].chain->beta == 1.0);
  for (const AnalysisReport& point : rep.points) {
    REQUIRE(point.chain.has_value());
    CHECK(point.chain->passed);
    CHECK(point.chain->length == 2);
  }
  CHECK_FALSE(any_inapplicable(rep));
  CHECK_FALSE(summarize(rep).empty());
}
