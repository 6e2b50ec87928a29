#include "translin/cli.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "translin/experiment.hpp"
#include "translin/instance_io.hpp"

namespace translin {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw flag values; only the ones given on the command line are applied.
struct Flags {
  std::string config;
  std::string preset;
  std::vector<std::size_t> n;
  std::size_t s = 0;
  std::string alpha;
  std::string transform1, transform2;
  std::string weights;
  std::uint64_t weight_lo = 0, weight_hi = 0;
  std::string embedding;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  double budget_mult = 0.0;
  std::vector<double> r;
  double confidence = 0.0;
  std::size_t samples = 0, probes = 0, trials = 0;
  double delta = 0.0;
  std::uint64_t exponent = 0;
  std::size_t stride = 0;
  std::string instance;
  std::size_t workers = 0;
  std::string out, json;
  bool exhaustive = false, delta_ref = false, check = false;
};

struct Options {
  CLI::App* sub = nullptr;
  ExperimentKind kind{};
};

void add_flags(CLI::App& sub, Flags& f, ExperimentKind kind) {
  sub.add_option("--config", f.config, "JSON config file; flags override its values");
  sub.add_option("--n", f.n, "comma-separated list of n (m for the chance preset)")->delimiter(',');
  sub.add_option("--seed", f.seed, "master seed");
  sub.add_option("--reps", f.reps, "replicates (drift: sampled states)");
  sub.add_option("--budget-mult", f.budget_mult, "iteration budget multiplier");
  sub.add_option("--workers", f.workers, "worker threads");
  sub.add_option("--out", f.out, "CSV output path");
  sub.add_option("--json", f.json, "JSON report path");
  sub.add_flag("--check", f.check, "exit 3 if an acceptance check fails");
  if (kind != ExperimentKind::escape && kind != ExperimentKind::chance) {
    sub.add_option("--preset", f.preset, "onemax | separable | chance | random");
    sub.add_option("--s", f.s, "overlap size");
    sub.add_option("--alpha", f.alpha, "alpha as a/b");
    sub.add_option("--transform1", f.transform1, "outer transform of the first part, e.g. square or scale:2*sqrt");
    sub.add_option("--transform2", f.transform2, "outer transform of the second part");
    sub.add_option("--weights", f.weights, "uniform-integer | exponential-doubling | all-ones");
    sub.add_option("--embedding", f.embedding, "canonical | random");
    sub.add_option("--instance", f.instance, "instance JSON file");
  }
  if (kind != ExperimentKind::escape) {
    sub.add_option("--weight-lo", f.weight_lo, "smallest random weight");
    sub.add_option("--weight-hi", f.weight_hi, "largest random weight");
  }
  switch (kind) {
    case ExperimentKind::drift:
      sub.add_flag("--exhaustive", f.exhaustive, "enumerate every state (n - s <= 12)");
      sub.add_option("--trials", f.trials, "Monte-Carlo trials per state above 20 bits");
      break;
    case ExperimentKind::tail:
      sub.add_option("--r", f.r, "comma-separated r values")->delimiter(',');
      sub.add_option("--delta", f.delta, "drift constant; default is the certified minimum ratio");
      sub.add_flag("--delta-ref", f.delta_ref, "use e^-3 eps/(2n) as the drift constant");
      break;
    case ExperimentKind::chance:
      sub.add_option("--confidence", f.confidence, "alpha_c");
      sub.add_option("--samples", f.samples, "normal samples per probe");
      sub.add_option("--probes", f.probes, "random probe points");
      sub.add_option("--instance", f.instance, "chance instance JSON file");
      break;
    case ExperimentKind::escape:
      sub.add_option("--exponent", f.exponent, "exponent E of the zero-count term (default n^2)");
      break;
    case ExperimentKind::run:
      sub.add_option("--stride", f.stride, "trace sampling stride (0: start and end only)");
      break;
    case ExperimentKind::scale:
      break;
  }
}

bool given(const CLI::App& sub, const char* name) {
  const CLI::Option* opt = sub.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

ExperimentConfig build_config(const CLI::App& sub, const Flags& f, ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  if (kind == ExperimentKind::escape) c.n_list = {8, 12, 16, 20, 24};
  if (kind == ExperimentKind::chance) c.n_list = {20};
  if (kind == ExperimentKind::tail || kind == ExperimentKind::drift) c.n_list = {10};
  if (kind == ExperimentKind::tail) c.replicates = 1000;
  if (kind == ExperimentKind::drift) c.replicates = 100;
  if (!f.config.empty()) {
    nlohmann::json j;
    try {
      j = read_json_file(f.config);
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& e) {
      throw IoError(e.what());
    }
    c = config_from_json(j, c);
    c.kind = kind;
  }
  if (given(sub, "--preset")) c.preset = f.preset;
  if (given(sub, "--n")) c.n_list = f.n;
  if (given(sub, "--s")) c.s = f.s;
  if (given(sub, "--alpha")) c.alpha = parse_rational(f.alpha);
  if (given(sub, "--transform1")) c.transform1 = parse_transform(f.transform1);
  if (given(sub, "--transform2")) c.transform2 = parse_transform(f.transform2);
  if (given(sub, "--weights")) c.weights = parse_weight_scheme(f.weights);
  if (given(sub, "--weight-lo")) c.weight_lo = f.weight_lo;
  if (given(sub, "--weight-hi")) c.weight_hi = f.weight_hi;
  if (given(sub, "--embedding")) c.embedding = parse_embedding_scheme(f.embedding);
  if (given(sub, "--reps")) c.replicates = f.reps;
  if (given(sub, "--seed")) c.seed = f.seed;
  if (given(sub, "--budget-mult")) c.budget_multiplier = f.budget_mult;
  if (given(sub, "--r")) c.r_list = f.r;
  if (given(sub, "--exhaustive")) c.exhaustive = f.exhaustive;
  if (given(sub, "--confidence")) c.confidence = f.confidence;
  if (given(sub, "--samples")) c.level_samples = f.samples;
  if (given(sub, "--probes")) c.probes = f.probes;
  if (given(sub, "--trials")) c.trials = f.trials;
  if (given(sub, "--delta")) c.delta = f.delta;
  if (given(sub, "--delta-ref")) c.use_reference_delta = f.delta_ref;
  if (given(sub, "--exponent")) c.exponent = f.exponent;
  if (given(sub, "--stride")) c.trace_stride = f.stride;
  if (given(sub, "--instance")) c.instance_path = f.instance;
  if (given(sub, "--workers")) c.workers = f.workers;
  if (given(sub, "--out")) c.out = f.out;
  if (given(sub, "--json")) c.json_out = f.json;
  if (c.workers < 1) throw std::invalid_argument("--workers must be at least 1");
  return c;
}

void write_output(const std::string& path, const std::string& text) {
  try {
    write_text_file(path, text);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Runtime experiments for the (1+1) EA on monotone transforms of linear functions", "translin"};
  app.require_subcommand(1);
  Flags flags;
  const std::pair<ExperimentKind, const char*> commands[] = {
      {ExperimentKind::scale, "expected runtime against n ln n"},
      {ExperimentKind::drift, "one-step drift of the potential"},
      {ExperimentKind::escape, "escape time on the multimodal counterexample"},
      {ExperimentKind::tail, "tail frequencies against the multiplicative drift bound"},
      {ExperimentKind::chance, "chance-constrained objective and its confidence level"},
      {ExperimentKind::run, "raw EA runs with traces"},
  };
  std::vector<Options> subs;
  for (const auto& [kind, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(kind), help);
    add_flags(*sub, flags, kind);
    subs.push_back({sub, kind});
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }

  const Options* chosen = nullptr;
  for (const auto& o : subs)
    if (o.sub->parsed()) chosen = &o;
  if (chosen == nullptr) return exit_config;

  try {
    const ExperimentConfig config = build_config(*chosen->sub, flags, chosen->kind);
    const ReportBundle report = run_experiment(config);
    if (!config.out.empty()) write_output(config.out, report.csv());
    if (!config.json_out.empty()) write_output(config.json_out, report.to_json().dump(2) + "\n");
    if (config.out.empty() && config.json_out.empty()) std::cout << report.csv();
    for (const auto& note : report.notices) std::cerr << "note: " << note << '\n';
    for (const auto& failure : report.failures) std::cerr << "check: " << failure << '\n';
    std::cout << report.headline() << std::endl;
    if (flags.check && !report.checks_passed()) return exit_check;
    return exit_ok;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  }
}

}  // namespace

int cli_main(int argc, char** argv) { return run(argc, argv); }

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"translin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace translin
