#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "translin/cli.hpp"
#include "translin/experiment.hpp"
#include "translin/fit.hpp"
#include "translin/instance_io.hpp"
#include "translin/stats.hpp"

using namespace translin;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "translin_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("summary statistics") {
  const double v[] = {4, 1, 3, 2};
  const auto s = summarize(v);
  CHECK(s.count == 4);
  CHECK(s.mean == 2.5);
  CHECK(s.median == 2.5);
  CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));
  const double one[] = {7};
  CHECK(summarize(one).sd == 0.0);
}

TEST_CASE("fits recover their own models") {
  std::vector<FitPoint> nlogn, square;
  for (double n : {16.0, 32.0, 64.0, 128.0, 256.0}) {
    nlogn.push_back({n, 5.0 * n * std::log(n)});
    square.push_back({n, 3.0 * n * n});
  }
  const auto a = fit_nlogn(nlogn);
  CHECK(std::fabs(a.nlogn_coefficient - 5.0) <= 5e-6);
  CHECK(a.nlogn_rms_residual < 1e-9);
  const auto q = fit_power(square);
  CHECK(std::fabs(q.exponent - 2.0) <= 2e-6);
  CHECK(std::fabs(q.coefficient - 3.0) <= 3e-6);
  CHECK_THROWS(fit_power(std::vector<FitPoint>{{2, 1}, {2, 1}, {4, 3}}));
  CHECK_THROWS(fit_nlogn(std::vector<FitPoint>{{2, 1}, {4, -1}, {8, 3}}));
}

TEST_CASE("config echo re-parses to the same config") {
  ExperimentConfig c;
  c.kind = ExperimentKind::tail;
  c.preset = "random";
  c.n_list = {10, 20};
  c.s = 3;
  c.alpha = {3, 5};
  c.transform1 = parse_transform("scale:2*sqrt");
  c.transform2 = MonotoneTransform::power(1.5);
  c.weights = WeightScheme::exponential_doubling;
  c.embedding = EmbeddingScheme::random;
  c.delta = 0.01;
  c.exponent = 9;
  c.r_list = {0.5, 4};
  c.out = "x.csv";
  CHECK(config_from_json(config_to_json(c)) == c);
  CHECK(config_from_json(nlohmann::json::parse(config_to_json(c).dump())) == c);

  ExperimentConfig base;
  base.seed = 99;
  const auto partial = config_from_json(nlohmann::json{{"reps", 3}, {"transform1", "square"}}, base);
  CHECK(partial.seed == 99);
  CHECK(partial.replicates == 3);
  CHECK(partial.transform1 == MonotoneTransform::square());
  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"reps", "many"}}), std::invalid_argument);
}

TEST_CASE("reports are reproducible and schedule independent") {
  ExperimentConfig c;
  c.kind = ExperimentKind::scale;
  c.preset = "separable";
  c.n_list = {8, 16, 32};
  c.replicates = 30;
  c.seed = 5;
  const auto a = run_experiment(c);
  const auto b = run_experiment(c);
  c.workers = 3;
  const auto d = run_experiment(c);
  CHECK(a.csv() == b.csv());
  CHECK(a.csv() == d.csv());
  CHECK(a.to_json()["rows"] == d.to_json()["rows"]);
  CHECK(config_from_json(a.to_json()["config"]) == a.config);
  CHECK(line_count(a.csv()) == 4);
  CHECK(a.fits.size() == 1);
  c.seed = 6;
  CHECK(run_experiment(c).csv() != a.csv());
}

TEST_CASE("censored runs are counted, not averaged") {
  ExperimentConfig c;
  c.kind = ExperimentKind::scale;
  c.n_list = {64};
  c.replicates = 20;
  c.budget_multiplier = 0.05;
  const auto r = run_experiment(c);
  REQUIRE(r.scaling.size() == 1);
  CHECK(r.scaling[0].censored > 0);
  CHECK_FALSE(r.checks_passed());
  std::size_t exhausted = 0;
  c.kind = ExperimentKind::run;
  const auto runs = run_experiment(c);
  for (const auto& t : runs.runs) exhausted += t.budget_exhausted() ? 1 : 0;
  CHECK(exhausted > 0);
  CHECK(line_count(runs.csv()) == 21);
}

TEST_CASE("every experiment kind produces its schema") {
  ExperimentConfig c;
  c.replicates = 20;
  c.seed = 3;

  c.kind = ExperimentKind::drift;
  c.n_list = {8};
  c.s = 2;
  c.exhaustive = true;
  auto r = run_experiment(c);
  CHECK(r.csv().rfind("state_index,ones,phi,drift,ratio\n", 0) == 0);
  CHECK(r.checks_passed());
  c.exhaustive = false;
  c.preset = "random";
  c.n_list = {48};
  c.s = 20;
  c.trials = 2000;
  c.replicates = 3;
  r = run_experiment(c);  // 28 bits: Monte-Carlo path
  CHECK(r.drift->records.size() <= 3);

  c = ExperimentConfig{};
  c.kind = ExperimentKind::escape;
  c.n_list = {6, 8, 10};
  c.replicates = 20;
  r = run_experiment(c);
  CHECK(r.csv().rfind("n,reps,mean_T,sd_T\n", 0) == 0);
  CHECK(r.summary["structure"].size() == 3);

  c = ExperimentConfig{};
  c.kind = ExperimentKind::tail;
  c.n_list = {8};
  c.replicates = 200;
  r = run_experiment(c);
  CHECK(r.csv() .rfind("r,threshold,exceed_freq,bound\n", 0) == 0);
  CHECK(r.tail.size() == 3);
  CHECK(r.summary["delta_source"] == "certified-minimum");
  c.use_reference_delta = true;
  CHECK(run_experiment(c).summary["delta"].get<double>() == doctest::Approx(std::exp(-3.0) * (2 - std::exp(0.5)) / 16));

  c = ExperimentConfig{};
  c.kind = ExperimentKind::chance;
  c.n_list = {8};
  c.level_samples = 20000;
  c.probes = 2;
  r = run_experiment(c);
  CHECK(r.csv().rfind("probe,g_value,empirical_level,alpha_c\n", 0) == 0);
  CHECK(r.chance.size() >= 3);
}

TEST_CASE("invalid configurations are rejected") {
  ExperimentConfig c;
  c.n_list = {7};
  CHECK_THROWS_AS(validate_config(c), std::invalid_argument);
  c.n_list = {8};
  c.preset = "knapsack";
  CHECK_THROWS_AS(validate_config(c), std::invalid_argument);
  c.preset = "separable";
  c.s = 1;
  CHECK_THROWS_AS(validate_config(c), std::invalid_argument);
  c = ExperimentConfig{};
  c.kind = ExperimentKind::drift;
  c.n_list = {8, 10};
  CHECK_THROWS_AS(validate_config(c), std::invalid_argument);
  c.n_list = {40};
  c.exhaustive = true;
  CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
}

TEST_CASE("command line") {
  const auto csv = scratch("r.csv");
  const auto json = scratch("r.json");
  CHECK(cli_main({"scale", "--preset", "onemax", "--n", "64,128", "--reps", "10", "--seed", "1", "--out", csv.string()}) == exit_ok);
  const auto text = slurp(csv);
  CHECK(line_count(text) == 3);  // header plus two rows

  CHECK(cli_main({"drift", "--n", "8", "--s", "2", "--alpha", "1/2", "--exhaustive", "--json", json.string(), "--out",
                  csv.string(), "--check"}) == exit_ok);
  const auto report = read_json_file(json.string());
  CHECK(report["summary"]["pass"] == true);
  CHECK(report["checks"]["passed"] == true);
  CHECK(report["environment"]["artifact"] == "translin");

  CHECK(cli_main({"scale", "--n", "7", "--alpha", "1/2"}) == exit_config);
  CHECK(cli_main({"scale", "--bogus"}) == exit_config);
  CHECK(cli_main({}) == exit_config);
  CHECK(cli_main({"scale", "--n", "16", "--out", "/nonexistent/dir/r.csv"}) == exit_io);
  CHECK(cli_main({"scale", "--n", "16", "--instance", "/nonexistent/inst.json"}) == exit_io);
  CHECK(cli_main({"scale", "--n", "32", "--reps", "5", "--budget-mult", "0.01", "--out", csv.string(), "--check"}) == exit_check);

  // config file values, overridden by flags
  const auto cfg = scratch("cfg.json");
  write_text_file(cfg.string(), R"({"n": [16], "reps": 4, "seed": 2})");
  CHECK(cli_main({"scale", "--config", cfg.string(), "--reps", "6", "--out", csv.string(), "--json", json.string()}) == exit_ok);
  const auto echoed = read_json_file(json.string())["config"];
  CHECK(echoed["reps"] == 6);
  CHECK(echoed["seed"] == 2);
  CHECK(echoed["n"] == nlohmann::json::array({16}));
  CHECK(cli_main({"scale", "--config", scratch("missing.json").string()}) == exit_io);
  fs::remove_all(csv.parent_path());
}
