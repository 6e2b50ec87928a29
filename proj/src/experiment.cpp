#include "translin/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "translin/chance.hpp"
#include "translin/drift_bounds.hpp"
#include "translin/instance_io.hpp"
#include "translin/multimodal.hpp"
#include "translin/parallel.hpp"
#include "translin/potential.hpp"
#include "translin/stats.hpp"

namespace translin {

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::scale: return "scale";
    case ExperimentKind::drift: return "drift";
    case ExperimentKind::escape: return "escape";
    case ExperimentKind::tail: return "tail";
    case ExperimentKind::chance: return "chance";
    case ExperimentKind::run: return "run";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(const std::string& text) {
  for (auto kind : {ExperimentKind::scale, ExperimentKind::drift, ExperimentKind::escape, ExperimentKind::tail,
                    ExperimentKind::chance, ExperimentKind::run})
    if (to_string(kind) == text) return kind;
  throw std::invalid_argument("unknown experiment '" + text + "'");
}

// ---------------------------------------------------------------------------
// Configuration

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["experiment"] = to_string(c.kind);
  j["preset"] = c.preset;
  j["n"] = c.n_list;
  j["s"] = c.s;
  j["alpha"] = c.alpha.to_string();
  j["transform1"] = transform_to_json(c.transform1);
  j["transform2"] = transform_to_json(c.transform2);
  j["weights"] = to_string(c.weights);
  j["weight_lo"] = c.weight_lo;
  j["weight_hi"] = c.weight_hi;
  j["embedding"] = to_string(c.embedding);
  j["reps"] = c.replicates;
  j["seed"] = c.seed;
  j["budget_mult"] = c.budget_multiplier;
  j["r"] = c.r_list;
  j["exhaustive"] = c.exhaustive;
  j["alpha_c"] = c.confidence;
  j["level_samples"] = c.level_samples;
  j["probes"] = c.probes;
  j["trials"] = c.trials;
  j["delta"] = c.delta ? nlohmann::json(*c.delta) : nlohmann::json(nullptr);
  j["delta_ref"] = c.use_reference_delta;
  j["exponent"] = c.exponent ? nlohmann::json(*c.exponent) : nlohmann::json(nullptr);
  j["trace_stride"] = c.trace_stride;
  j["instance"] = c.instance_path;
  j["workers"] = c.workers;
  j["out"] = c.out;
  j["json"] = c.json_out;
  return j;
}

namespace {

MonotoneTransform transform_value(const nlohmann::json& j) {
  return j.is_string() ? parse_transform(j.get<std::string>()) : transform_from_json(j);
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig c) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  try {
    if (j.contains("experiment")) c.kind = parse_experiment_kind(j["experiment"].get<std::string>());
    if (j.contains("preset")) c.preset = j["preset"].get<std::string>();
    if (j.contains("n")) c.n_list = j["n"].is_array() ? j["n"].get<std::vector<std::size_t>>() : std::vector{j["n"].get<std::size_t>()};
    if (j.contains("s")) c.s = j["s"].get<std::size_t>();
    if (j.contains("alpha")) c.alpha = parse_rational(j["alpha"].get<std::string>());
    if (j.contains("transform1")) c.transform1 = transform_value(j["transform1"]);
    if (j.contains("transform2")) c.transform2 = transform_value(j["transform2"]);
    if (j.contains("weights")) c.weights = parse_weight_scheme(j["weights"].get<std::string>());
    if (j.contains("weight_lo")) c.weight_lo = j["weight_lo"].get<std::uint64_t>();
    if (j.contains("weight_hi")) c.weight_hi = j["weight_hi"].get<std::uint64_t>();
    if (j.contains("embedding")) c.embedding = parse_embedding_scheme(j["embedding"].get<std::string>());
    if (j.contains("reps")) c.replicates = j["reps"].get<std::size_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("budget_mult")) c.budget_multiplier = j["budget_mult"].get<double>();
    if (j.contains("r")) c.r_list = j["r"].get<std::vector<double>>();
    if (j.contains("exhaustive")) c.exhaustive = j["exhaustive"].get<bool>();
    if (j.contains("alpha_c")) c.confidence = j["alpha_c"].get<double>();
    if (j.contains("level_samples")) c.level_samples = j["level_samples"].get<std::size_t>();
    if (j.contains("probes")) c.probes = j["probes"].get<std::size_t>();
    if (j.contains("trials")) c.trials = j["trials"].get<std::size_t>();
    if (j.contains("delta")) c.delta = j["delta"].is_null() ? std::nullopt : std::optional(j["delta"].get<double>());
    if (j.contains("delta_ref")) c.use_reference_delta = j["delta_ref"].get<bool>();
    if (j.contains("exponent"))
      c.exponent = j["exponent"].is_null() ? std::nullopt : std::optional(j["exponent"].get<std::uint64_t>());
    if (j.contains("trace_stride")) c.trace_stride = j["trace_stride"].get<std::size_t>();
    if (j.contains("instance")) c.instance_path = j["instance"].get<std::string>();
    if (j.contains("workers")) c.workers = j["workers"].get<std::size_t>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("json")) c.json_out = j["json"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

void validate_config(const ExperimentConfig& c) {
  if (c.n_list.empty()) throw std::invalid_argument("at least one n is required");
  if (c.replicates < 1) throw std::invalid_argument("replicate count must be at least 1");
  if (!(c.budget_multiplier > 0.0)) throw std::invalid_argument("budget multiplier must be positive");
  const bool known = c.preset == "onemax" || c.preset == "separable" || c.preset == "chance" || c.preset == "random";
  if (!known) throw std::invalid_argument("unknown preset '" + c.preset + "'");
  if (c.weight_lo > c.weight_hi) throw std::invalid_argument("weight_lo exceeds weight_hi");
  if (c.kind == ExperimentKind::escape) {
    for (auto n : c.n_list)
      if (n < 2) throw std::invalid_argument("escape study needs n >= 2");
    return;
  }
  if (c.kind == ExperimentKind::chance) {
    if (!(c.confidence > 0.0 && c.confidence < 1.0)) throw std::invalid_argument("alpha_c must lie in (0, 1)");
    if (c.level_samples < 10000) throw std::invalid_argument("level_samples must be at least 10^4");
    return;
  }
  if (!c.instance_path.empty()) return;
  for (auto n : c.n_list) {
    if (c.preset == "chance") {
      if (n < 1) throw std::invalid_argument("chance preset needs m >= 1");
      if (!(c.confidence >= 0.5 && c.confidence < 1.0)) throw std::invalid_argument("chance preset needs alpha_c in [1/2, 1)");
    } else if (c.preset == "separable") {
      if (n < 2 || n % 2 != 0) throw std::invalid_argument("separable preset needs an even n, got " + std::to_string(n));
      if (c.s != 0) throw std::invalid_argument("separable preset has s = 0");
    } else {
      validate_dimensions(n, c.s, c.alpha);
    }
  }
  if (c.kind == ExperimentKind::drift && c.n_list.size() != 1) throw std::invalid_argument("drift takes a single n");
  if (c.kind == ExperimentKind::tail) {
    for (double r : c.r_list)
      if (!(r >= 0.0)) throw std::invalid_argument("tail r values must be non-negative");
    if (c.delta && !(*c.delta > 0.0)) throw std::invalid_argument("delta must be positive");
  }
}

// ---------------------------------------------------------------------------
// Instances

namespace {

constexpr std::uint64_t kInstanceTag = 0x1157A9CEULL;

std::uint64_t kind_tag(ExperimentKind kind) { return static_cast<std::uint64_t>(kind) + 1; }

std::uint64_t budget_for(double multiplier, std::size_t n) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  return static_cast<std::uint64_t>(std::ceil(multiplier * std::numbers::e * nn * std::log(nn)));
}

ChanceInstance make_chance(const ExperimentConfig& c, std::size_t m, RandomSource& rng) {
  Eigen::VectorXd mu(static_cast<Eigen::Index>(m));
  Eigen::VectorXd sigma(static_cast<Eigen::Index>(m));
  for (Eigen::Index i = 0; i < mu.size(); ++i) mu[i] = static_cast<double>(rng.uniform_int(c.weight_lo, c.weight_hi));
  for (Eigen::Index i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<double>(rng.uniform_int(c.weight_lo, c.weight_hi));
  return ChanceInstance(std::move(mu), std::move(sigma), c.confidence);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

nlohmann::json number_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

CompositeObjective make_instance(const ExperimentConfig& c, std::size_t grid_n) {
  if (!c.instance_path.empty()) return instance_from_json(read_json_file(c.instance_path));
  RandomSource rng(c.seed, stream_key(kInstanceTag, kind_tag(c.kind), grid_n));
  if (c.preset == "onemax") return onemax_instance(grid_n, c.s);
  if (c.preset == "chance") return build_chance(make_chance(c, grid_n, rng));
  GenerationSpec spec;
  spec.n = grid_n;
  spec.s = c.s;
  spec.alpha = c.alpha;
  spec.weight_lo = c.weight_lo;
  spec.weight_hi = c.weight_hi;
  spec.embedding = c.embedding;
  if (c.preset == "separable") {
    spec.s = 0;
    spec.alpha = {1, 2};
    spec.weights = WeightScheme::uniform_integer;
    spec.transform1 = MonotoneTransform::square();
    spec.transform2 = MonotoneTransform::square_root();
    spec.embedding = EmbeddingScheme::canonical;
  } else {
    spec.weights = c.weights;
    spec.transform1 = c.transform1;
    spec.transform2 = c.transform2;
  }
  return generate_instance(spec, rng);
}

// ---------------------------------------------------------------------------
// Studies

ReportBundle scaling_study(const ExperimentConfig& c) {
  validate_config(c);
  ReportBundle out;
  out.config = c;
  std::vector<FitPoint> points;
  for (auto grid_n : c.n_list) {
    const CompositeObjective f = make_instance(c, grid_n);
    const EAConfig ea = EAConfig::for_dimension(f.n(), budget_for(c.budget_multiplier, f.n()));
    auto traces = run_indexed(c.replicates, c.workers, [&](std::size_t rep) {
      RandomSource rng(c.seed, stream_key(kind_tag(c.kind), grid_n, rep));
      return run_ea(f, ea, rng);
    });
    std::vector<double> times;
    ScalingRow row;
    row.n = grid_n;
    row.s = f.s();
    row.alpha = f.alpha();
    row.replicates = c.replicates;
    for (const auto& t : traces) {
      if (t.hitting_time) {
        times.push_back(static_cast<double>(*t.hitting_time));
      } else {
        ++row.censored;
      }
    }
    const auto summary = summarize(times);
    row.mean_T = times.empty() ? std::nan("") : summary.mean;
    row.sd_T = summary.sd;
    row.median_T = times.empty() ? std::nan("") : summary.median;
    const double nn = static_cast<double>(grid_n);
    row.ratio_nlogn = row.mean_T / (nn * std::log(nn));
    out.scaling.push_back(row);
    if (!times.empty() && grid_n > 1) points.push_back({nn, row.mean_T});
    if (static_cast<double>(row.censored) > 0.01 * static_cast<double>(row.replicates))
      out.failures.push_back("n=" + std::to_string(grid_n) + ": more than 1% of runs censored");
  }

  double lo = INFINITY, hi = 0.0;
  for (const auto& row : out.scaling) {
    if (std::isfinite(row.ratio_nlogn)) {
      lo = std::min(lo, row.ratio_nlogn);
      hi = std::max(hi, row.ratio_nlogn);
    }
  }
  const double spread = hi / lo;
  out.summary["ratio_spread"] = number_or_null(spread);
  if (out.scaling.size() > 1 && !(spread <= 1.4)) out.failures.push_back("ratio max/min " + format_double(spread) + " exceeds 1.4");

  std::set<double> distinct;
  for (const auto& p : points) distinct.insert(p.n);
  if (distinct.size() >= 3) {
    const FitResult fit = fit_nlogn(points);
    out.fits.push_back(fit);
    out.summary["c"] = fit.nlogn_coefficient;
    out.summary["q"] = fit.power.exponent;
    if (!(fit.power.exponent >= 0.9 && fit.power.exponent <= 1.25))
      out.failures.push_back("power-fit exponent " + format_double(fit.power.exponent) + " outside [0.9, 1.25]");
    if (c.preset == "onemax" && c.s == 0 && c.instance_path.empty() &&
        !(fit.nlogn_coefficient >= 2.0 && fit.nlogn_coefficient <= 3.5))
      out.failures.push_back("OneMax n ln n coefficient " + format_double(fit.nlogn_coefficient) + " outside [2.0, 3.5]");
  } else {
    out.notices.push_back("fewer than 3 distinct n: fits skipped");
  }
  return out;
}

ReportBundle escape_study(const ExperimentConfig& c) {
  validate_config(c);
  ReportBundle out;
  out.config = c;
  std::vector<FitPoint> points;
  nlohmann::json structure = nlohmann::json::array();
  for (auto n : c.n_list) {
    const MultimodalInstance inst(n, c.exponent);
    if (n <= 16) {
      const auto verdict = verify_multimodal_structure(inst);
      structure.push_back({{"n", n},
                           {"strict_local_optima", verdict.single_ones_are_strict_local_optima},
                           {"unique_global_minimum", verdict.unique_global_minimum_at_first_unit}});
      if (!verdict.single_ones_are_strict_local_optima || !verdict.unique_global_minimum_at_first_unit)
        out.failures.push_back("n=" + std::to_string(n) + ": multimodal structure check failed");
    }
    const double nn = static_cast<double>(n);
    const auto budget = static_cast<std::uint64_t>(std::ceil(c.budget_multiplier * std::numbers::e * nn * nn));
    const EAConfig ea = EAConfig::for_dimension(n, budget);
    auto traces = run_indexed(c.replicates, c.workers, [&](std::size_t rep) {
      RandomSource rng(c.seed, stream_key(kind_tag(c.kind), n, rep));
      return run_ea(inst, ea, rng, {}, BitString::unit(n, 1));
    });
    EscapeRow row;
    row.n = n;
    row.replicates = c.replicates;
    std::vector<double> times;
    for (const auto& t : traces) {
      if (t.hitting_time) {
        times.push_back(static_cast<double>(*t.hitting_time));
      } else {
        ++row.censored;
      }
    }
    const auto summary = summarize(times);
    row.mean_T = times.empty() ? std::nan("") : summary.mean;
    row.sd_T = summary.sd;
    row.median_T = times.empty() ? std::nan("") : summary.median;
    out.escape.push_back(row);
    if (!times.empty()) points.push_back({nn, row.mean_T});
    if (static_cast<double>(row.censored) > 0.01 * static_cast<double>(row.replicates))
      out.failures.push_back("n=" + std::to_string(n) + ": more than 1% of runs censored");
  }
  out.summary["structure"] = structure;
  std::set<double> distinct;
  for (const auto& p : points) distinct.insert(p.n);
  if (distinct.size() >= 3) {
    FitResult fit;
    fit.points = points.size();
    fit.power = fit_power(points);
    fit.nlogn_coefficient = std::nan("");
    fit.nlogn_rms_residual = std::nan("");
    out.fits.push_back(fit);
    out.summary["q"] = fit.power.exponent;
    if (!(fit.power.exponent >= 1.7 && fit.power.exponent <= 2.3))
      out.failures.push_back("escape exponent " + format_double(fit.power.exponent) + " outside [1.7, 2.3]");
  } else {
    out.notices.push_back("fewer than 3 distinct n: fit skipped");
  }
  return out;
}

ReportBundle tail_study(const ExperimentConfig& c) {
  validate_config(c);
  ReportBundle out;
  out.config = c;
  const CompositeObjective f = make_instance(c, c.n_list.front());
  const double p = f.default_mutation_probability();

  double delta = 0.0;
  std::string source;
  if (c.delta) {
    delta = *c.delta;
    source = "supplied";
  } else {
    if (f.size() > kMaxSweepBits)
      throw std::invalid_argument("tail: no certified delta; n - s exceeds 12 bits and no --delta was given");
    const DriftReport report = exhaustive_drift_check(f, p);
    if (!report.pass) throw std::invalid_argument("tail: no certified delta; the drift check failed on this instance");
    out.summary["min_ratio"] = number_or_null(report.min_ratio);
    delta = c.use_reference_delta ? report.delta_ref : report.min_ratio;
    source = c.use_reference_delta ? "reference" : "certified-minimum";
    if (!std::isfinite(delta)) throw std::invalid_argument("tail: instance has no non-optimal states");
  }
  const PotentialPair pots = build_potentials(f);
  double s_min = INFINITY;
  double x_max = 0.0;
  for (Eigen::Index i = 0; i < pots.position_coefficients.size(); ++i) {
    const double v = pots.position_coefficients[i];
    if (v > 0.0) s_min = std::min(s_min, v);
    x_max += v;
  }
  const double r_max = c.r_list.empty() ? 0.0 : *std::max_element(c.r_list.begin(), c.r_list.end());
  const double longest = multiplicative_drift_bounds(x_max, s_min, delta).threshold(r_max);
  const std::uint64_t budget = std::max<std::uint64_t>(budget_for(c.budget_multiplier, f.n()),
                                                       static_cast<std::uint64_t>(std::ceil(longest)) + 1);
  const EAConfig ea = EAConfig::for_dimension(f.n(), budget);

  auto traces = run_indexed(c.replicates, c.workers, [&](std::size_t rep) {
    RandomSource rng(c.seed, stream_key(kind_tag(c.kind), c.n_list.front(), rep));
    return run_ea(f, ea, rng);
  });

  const double runs = static_cast<double>(c.replicates);
  std::vector<double> times;
  for (double r : c.r_list) {
    TailRow row;
    row.r = r;
    row.bound = std::exp(-r);
    std::size_t exceed = 0;
    double threshold_sum = 0.0;
    for (const auto& t : traces) {
      const double x0 = t.samples.front().phi;
      if (x0 <= 0.0) {
        continue;  // started at phi = 0: T = 0 cannot exceed anything
      }
      const double threshold = multiplicative_drift_bounds(x0, s_min, delta).threshold(r);
      threshold_sum += threshold;
      const double hit = t.hitting_time ? static_cast<double>(*t.hitting_time) : INFINITY;
      if (hit > threshold) ++exceed;
    }
    row.threshold = threshold_sum / runs;
    row.exceed_freq = static_cast<double>(exceed) / runs;
    row.standard_error = std::sqrt(row.bound * (1.0 - row.bound) / runs);
    row.violated = row.exceed_freq - row.bound > 3.0 * row.standard_error;
    if (row.violated) out.failures.push_back("r=" + format_double(r) + ": exceedance above e^-r + 3 SE");
    out.tail.push_back(row);
  }
  for (const auto& t : traces)
    if (t.hitting_time) times.push_back(static_cast<double>(*t.hitting_time));
  out.summary["delta"] = delta;
  out.summary["delta_source"] = source;
  out.summary["delta_ref"] = reference_delta(f);
  out.summary["s_min"] = s_min;
  out.summary["mean_T"] = summarize(times).mean;
  out.summary["budget"] = budget;
  return out;
}

ReportBundle chance_demo(const ExperimentConfig& c) {
  validate_config(c);
  ReportBundle out;
  out.config = c;
  RandomSource instance_rng(c.seed, stream_key(kInstanceTag, kind_tag(c.kind), c.n_list.front()));
  const ChanceInstance inst =
      c.instance_path.empty() ? make_chance(c, c.n_list.front(), instance_rng) : chance_from_json(read_json_file(c.instance_path));
  const std::size_t m = inst.size();

  std::vector<BitString> probes;
  if (inst.confidence() >= 0.5) {
    const CompositeObjective f = build_chance(inst);
    const EAConfig ea = EAConfig::for_dimension(f.n(), budget_for(c.budget_multiplier, f.n()));
    RandomSource rng(c.seed, stream_key(kind_tag(c.kind), m, 0));
    RunTrace trace = run_ea(f, ea, rng);
    out.summary["ea_hitting_time"] = trace.hitting_time ? nlohmann::json(*trace.hitting_time) : nlohmann::json(nullptr);
    out.summary["ea_best"] = trace.final_state.to_string();
    if (trace.budget_exhausted()) out.failures.push_back("EA did not reach the optimum within the budget");
    probes.push_back(trace.final_state);
    out.runs.push_back(std::move(trace));
  } else {
    out.notices.push_back("alpha_c < 1/2: g is not a monotone composite, EA run skipped");
  }
  probes.push_back(BitString(m, true));
  RandomSource probe_rng(c.seed, stream_key(kind_tag(c.kind), m, 1));
  for (std::size_t k = 0; k < c.probes; ++k) probes.push_back(uniform_bitstring(m, probe_rng));

  out.summary["fractile"] = inst.fractile();
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const BitString& x = probes[k];
    if (!(inst.variance(x) > 0.0)) {
      out.notices.push_back("probe " + x.to_string() + " has zero variance; skipped");
      continue;
    }
    RandomSource level_rng(c.seed, stream_key(kind_tag(c.kind) + 16, m, k));
    const LevelEstimate level = chance_level_check(inst, x, c.level_samples, level_rng);
    out.chance.push_back({x.to_string(), chance_value(inst, x), level.level, level.standard_error, inst.confidence()});
    if (!(std::fabs(level.level - inst.confidence()) <= 0.003))
      out.failures.push_back("probe " + x.to_string() + ": empirical level off by more than 0.003");
  }
  return out;
}

ReportBundle drift_study(const ExperimentConfig& c) {
  validate_config(c);
  ReportBundle out;
  out.config = c;
  const CompositeObjective f = make_instance(c, c.n_list.front());
  const double p = f.default_mutation_probability();
  const std::size_t m = f.size();
  if (c.exhaustive) {
    if (m > kMaxSweepBits) throw std::invalid_argument("drift --exhaustive needs n - s <= 12");
    out.drift = exhaustive_drift_check(f, p);
  } else {
    RandomSource rng(c.seed, stream_key(kind_tag(c.kind), c.n_list.front(), 0));
    std::vector<BitString> states;
    for (std::size_t k = 0; k < c.replicates; ++k) states.push_back(uniform_bitstring(m, rng));
    if (m <= kMaxExactBits) {
      out.drift = exhaustive_drift_check(f, p, states);
    } else {
      if (c.trials < 1000) throw std::invalid_argument("drift: trials must be at least 10^3");
      const PotentialPair pots = build_potentials(f);
      DriftReport report;
      report.delta_ref = reference_delta(f);
      report.epsilon = f.epsilon();
      report.instance = "monte-carlo n=" + std::to_string(f.n()) + " s=" + std::to_string(f.s());
      auto estimates = run_indexed(states.size(), c.workers, [&](std::size_t k) {
        RandomSource mc(c.seed, stream_key(kind_tag(c.kind) + 32, c.n_list.front(), k));
        return monte_carlo_drift(f, pots, states[k], p, c.trials, mc);
      });
      for (std::size_t k = 0; k < states.size(); ++k) {
        if (f.is_optimal(states[k])) continue;
        const double phi = eval_phi(f, pots, states[k]);
        report.records.push_back({k, states[k].one_count(), phi, estimates[k].estimate, estimates[k].estimate / phi});
      }
      report.finalize();
      out.notices.push_back("n - s above 20: drift estimated by Monte Carlo");
      out.drift = std::move(report);
    }
  }
  out.summary = out.drift->summary_json();
  if (!out.drift->pass) out.failures.push_back("minimum drift ratio below delta_ref");
  return out;
}

ReportBundle run_study(const ExperimentConfig& c) {
  validate_config(c);
  ReportBundle out;
  out.config = c;
  const CompositeObjective f = make_instance(c, c.n_list.front());
  EAConfig ea = EAConfig::for_dimension(f.n(), budget_for(c.budget_multiplier, f.n()), c.trace_stride);
  out.runs = run_indexed(c.replicates, c.workers, [&](std::size_t rep) {
    RandomSource rng(c.seed, stream_key(kind_tag(c.kind), c.n_list.front(), rep));
    return run_ea(f, ea, rng);
  });
  std::size_t censored = 0;
  for (const auto& t : out.runs)
    if (t.budget_exhausted()) ++censored;
  out.summary["censored"] = censored;
  out.summary["instance"] = instance_to_json(f);
  if (censored > 0) out.failures.push_back(std::to_string(censored) + " runs exhausted the budget");
  return out;
}

ReportBundle run_experiment(const ExperimentConfig& c) {
  switch (c.kind) {
    case ExperimentKind::scale: return scaling_study(c);
    case ExperimentKind::drift: return drift_study(c);
    case ExperimentKind::escape: return escape_study(c);
    case ExperimentKind::tail: return tail_study(c);
    case ExperimentKind::chance: return chance_demo(c);
    case ExperimentKind::run: return run_study(c);
  }
  throw std::logic_error("unhandled experiment kind");
}

// ---------------------------------------------------------------------------
// Reports

std::string ReportBundle::csv() const {
  std::ostringstream os;
  os.precision(17);
  switch (config.kind) {
    case ExperimentKind::scale:
      os << "n,s,alpha,reps,censored,mean_T,sd_T,median_T,ratio_nlogn\n";
      for (const auto& r : scaling)
        os << r.n << ',' << r.s << ',' << r.alpha.to_string() << ',' << r.replicates << ',' << r.censored << ',' << r.mean_T
           << ',' << r.sd_T << ',' << r.median_T << ',' << r.ratio_nlogn << '\n';
      break;
    case ExperimentKind::drift:
      if (drift) return drift->to_csv();
      break;
    case ExperimentKind::escape:
      os << "n,reps,mean_T,sd_T\n";
      for (const auto& r : escape) os << r.n << ',' << r.replicates << ',' << r.mean_T << ',' << r.sd_T << '\n';
      break;
    case ExperimentKind::tail:
      os << "r,threshold,exceed_freq,bound\n";
      for (const auto& r : tail) os << r.r << ',' << r.threshold << ',' << r.exceed_freq << ',' << r.bound << '\n';
      break;
    case ExperimentKind::chance:
      os << "probe,g_value,empirical_level,alpha_c\n";
      for (const auto& r : chance) os << r.probe << ',' << r.g_value << ',' << r.empirical_level << ',' << r.alpha_c << '\n';
      break;
    case ExperimentKind::run:
      os << "replicate,seed,stream,hitting_time,budget_exhausted,accepted_steps\n";
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto& t = runs[i];
        os << i << ',' << t.seed << ',' << t.stream << ',';
        if (t.hitting_time) os << *t.hitting_time;
        os << ',' << (t.budget_exhausted() ? 1 : 0) << ',' << t.accepted_steps << '\n';
      }
      break;
  }
  return os.str();
}

nlohmann::json ReportBundle::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  switch (config.kind) {
    case ExperimentKind::scale:
      for (const auto& r : scaling)
        rows.push_back({{"n", r.n}, {"s", r.s}, {"alpha", r.alpha.to_string()}, {"reps", r.replicates},
                        {"censored", r.censored}, {"mean_T", number_or_null(r.mean_T)}, {"sd_T", r.sd_T},
                        {"median_T", number_or_null(r.median_T)}, {"ratio_nlogn", number_or_null(r.ratio_nlogn)}});
      break;
    case ExperimentKind::drift:
      if (drift)
        for (const auto& r : drift->records)
          rows.push_back({{"state_index", r.state_index}, {"ones", r.ones}, {"phi", r.phi}, {"drift", r.drift}, {"ratio", r.ratio}});
      break;
    case ExperimentKind::escape:
      for (const auto& r : escape)
        rows.push_back({{"n", r.n}, {"reps", r.replicates}, {"censored", r.censored}, {"mean_T", number_or_null(r.mean_T)},
                        {"sd_T", r.sd_T}, {"median_T", number_or_null(r.median_T)}});
      break;
    case ExperimentKind::tail:
      for (const auto& r : tail)
        rows.push_back({{"r", r.r}, {"threshold", r.threshold}, {"exceed_freq", r.exceed_freq}, {"bound", r.bound},
                        {"standard_error", r.standard_error}, {"violated", r.violated}});
      break;
    case ExperimentKind::chance:
      for (const auto& r : chance)
        rows.push_back({{"probe", r.probe}, {"g_value", r.g_value}, {"empirical_level", r.empirical_level},
                        {"standard_error", r.standard_error}, {"alpha_c", r.alpha_c}});
      break;
    case ExperimentKind::run:
      for (const auto& t : runs) rows.push_back(translin::to_json(t));
      break;
  }
  nlohmann::json fit_json = nlohmann::json::array();
  for (const auto& f : fits) {
    nlohmann::json j = f.to_json();
    if (!std::isfinite(f.nlogn_coefficient)) j.erase("nlogn");
    fit_json.push_back(std::move(j));
  }
  return {{"experiment", to_string(config.kind)},
          {"config", config_to_json(config)},
          {"rows", std::move(rows)},
          {"fits", std::move(fit_json)},
          {"summary", summary},
          {"notices", notices},
          {"checks", {{"passed", checks_passed()}, {"failures", failures}}},
          {"environment", {{"artifact", "translin"}, {"version", kArtifactVersion}, {"seed", config.seed}}}};
}

std::string ReportBundle::headline() const {
  std::ostringstream os;
  os.precision(6);
  os << to_string(config.kind) << ": ";
  switch (config.kind) {
    case ExperimentKind::scale:
      os << scaling.size() << " rows";
      if (summary.contains("c")) os << ", c=" << summary["c"].get<double>() << ", q=" << summary["q"].get<double>();
      break;
    case ExperimentKind::drift:
      if (drift) os << drift->records.size() << " states, min_ratio=" << drift->min_ratio << ", delta_ref=" << drift->delta_ref
                    << ", pass=" << (drift->pass ? "true" : "false");
      break;
    case ExperimentKind::escape:
      os << escape.size() << " rows";
      if (summary.contains("q")) os << ", q=" << summary["q"].get<double>();
      break;
    case ExperimentKind::tail:
      os << tail.size() << " thresholds, delta=" << summary.value("delta", 0.0);
      break;
    case ExperimentKind::chance:
      os << chance.size() << " probes, K=" << summary.value("fractile", 0.0);
      break;
    case ExperimentKind::run:
      os << runs.size() << " runs";
      break;
  }
  os << (checks_passed() ? " [checks ok]" : " [checks failed: " + std::to_string(failures.size()) + "]");
  return os.str();
}

}  // namespace translin
