#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "translin/drift.hpp"
#include "translin/ea.hpp"
#include "translin/fit.hpp"
#include "translin/objective.hpp"
#include "translin/transform.hpp"

namespace translin {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum class ExperimentKind { scale, drift, escape, tail, chance, run };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& text);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::scale;
  std::string preset = "onemax";  // onemax | separable | chance | random
  std::vector<std::size_t> n_list{64};
  std::size_t s = 0;
  Rational alpha{1, 2};
  MonotoneTransform transform1 = MonotoneTransform::identity();
  MonotoneTransform transform2 = MonotoneTransform::identity();
  WeightScheme weights = WeightScheme::uniform_integer;
  std::uint64_t weight_lo = 1;
  std::uint64_t weight_hi = 100;
  EmbeddingScheme embedding = EmbeddingScheme::canonical;
  std::size_t replicates = 10;
  std::uint64_t seed = 1;
  double budget_multiplier = 20.0;
  std::vector<double> r_list{1.0, 2.0, 3.0};
  bool exhaustive = false;
  double confidence = 0.9;                // chance: alpha_c
  std::size_t level_samples = 1000000;    // chance: normal samples per probe
  std::size_t probes = 4;                 // chance: random probes besides all-ones and the EA result
  std::size_t trials = 10000;             // drift: Monte-Carlo trials beyond the enumeration cap
  std::optional<double> delta;            // tail: explicit delta
  bool use_reference_delta = false;       // tail: e^-3 eps/(2n) instead of the certified minimum ratio
  std::optional<std::uint64_t> exponent;  // escape: E, default n^2
  std::size_t trace_stride = 0;           // run
  std::string instance_path;
  std::size_t workers = 1;
  std::string out;
  std::string json_out;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

nlohmann::json config_to_json(const ExperimentConfig& config);
/// Keys present in `j` override the corresponding fields of `base`.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
/// Throws std::invalid_argument on an inconsistent configuration.
void validate_config(const ExperimentConfig& config);

struct ScalingRow {
  std::size_t n = 0;
  std::size_t s = 0;
  Rational alpha;
  std::size_t replicates = 0;
  std::size_t censored = 0;
  double mean_T = 0.0;  // over completed runs only
  double sd_T = 0.0;
  double median_T = 0.0;
  double ratio_nlogn = 0.0;  // mean_T / (n ln n)
};

struct EscapeRow {
  std::size_t n = 0;
  std::size_t replicates = 0;
  std::size_t censored = 0;
  double mean_T = 0.0;
  double sd_T = 0.0;
  double median_T = 0.0;
};

struct TailRow {
  double r = 0.0;
  double threshold = 0.0;  // mean over runs of (ln(X0/s_min) + r)/delta
  double exceed_freq = 0.0;
  double bound = 0.0;
  double standard_error = 0.0;
  bool violated = false;
};

struct ChanceRow {
  std::string probe;
  double g_value = 0.0;
  double empirical_level = 0.0;
  double standard_error = 0.0;
  double alpha_c = 0.0;
};

struct ReportBundle {
  ExperimentConfig config;
  std::vector<ScalingRow> scaling;
  std::vector<EscapeRow> escape;
  std::vector<TailRow> tail;
  std::vector<ChanceRow> chance;
  std::optional<DriftReport> drift;
  std::vector<RunTrace> runs;
  std::vector<FitResult> fits;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> notices;
  std::vector<std::string> failures;  // acceptance checks that did not hold

  bool checks_passed() const noexcept { return failures.empty(); }
  std::string csv() const;
  nlohmann::json to_json() const;
  std::string headline() const;
};

/// Composite instance for one grid value of the configured preset. For the
/// chance preset the grid value is the item count m (nominal n = 2m).
CompositeObjective make_instance(const ExperimentConfig& config, std::size_t grid_n);

ReportBundle scaling_study(const ExperimentConfig& config);
ReportBundle escape_study(const ExperimentConfig& config);
ReportBundle tail_study(const ExperimentConfig& config);
ReportBundle chance_demo(const ExperimentConfig& config);
ReportBundle drift_study(const ExperimentConfig& config);
ReportBundle run_study(const ExperimentConfig& config);
ReportBundle run_experiment(const ExperimentConfig& config);

}  // namespace translin
