#include "translin/drift.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace translin {

EventClassification classify_event(const BitString& x, const MutationEvent& event, const CompositeObjective& f) {
  const auto& embedding = f.second().embedding;
  const auto& linear = f.second().linear;
  EventClassification out;
  std::size_t count = 0;
  for (auto i : event.flipped_one_bits) {
    if (!x[i]) throw std::invalid_argument("classify_event: event does not describe a mutation of x");
    if (auto rank = embedding.rank(i)) {
      ++count;
      out.flipped_position = i;
      out.flipped_rank = linear.sorted_index()[*rank];
    }
  }
  if (count == 0) {
    out.flipped_position.reset();
    out.flipped_rank.reset();
    return out;
  }
  if (count >= 2) {
    out.kind = EventClass::multiple_ones;
    out.flipped_position.reset();
    out.flipped_rank.reset();
    return out;
  }
  out.kind = EventClass::single_one;
  const std::size_t beta = linear.first_equal(*out.flipped_rank);
  out.zero_flips_below_beta = true;
  for (auto i : event.flipped_zero_bits) {
    if (x[i]) throw std::invalid_argument("classify_event: event does not describe a mutation of x");
    if (auto rank = embedding.rank(i); rank && linear.sorted_index()[*rank] >= beta) out.zero_flips_below_beta = false;
  }
  return out;
}

namespace {

// f and phi over every point of {0,1}^m, indexed by bitmask.
struct StateTable {
  std::size_t m = 0;
  std::vector<double> f;
  std::vector<double> phi;
  std::uint64_t relevant = 0;  // positions with a positive weight
  std::uint64_t second = 0;    // positions in B2

  StateTable(const CompositeObjective& obj, const PotentialPair& pots) : m(obj.size()) {
    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<Eigen::Vector2d> parts(count, Eigen::Vector2d::Zero());
    f.resize(count);
    phi.assign(count, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const Eigen::Vector2d w = obj.part_weights(i);
      if (w[0] > 0.0 || w[1] > 0.0) relevant |= std::uint64_t{1} << i;
      if (obj.second().embedding.contains(i)) second |= std::uint64_t{1} << i;
    }
    f[0] = obj.combine(parts[0]);
    for (std::uint64_t y = 1; y < count; ++y) {
      const std::uint64_t rest = y & (y - 1);
      const auto low = static_cast<std::size_t>(std::countr_zero(y));
      parts[y] = parts[rest] + obj.part_weights(low);
      phi[y] = phi[rest] + pots.position_coefficients[static_cast<Eigen::Index>(low)];
      f[y] = obj.combine(parts[y]);
    }
  }

  bool optimal(std::uint64_t x) const noexcept { return (x & relevant) == 0; }
};

std::vector<double> mask_probabilities(std::size_t m, double p) {
  std::vector<double> prob(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    prob[k] = std::pow(p, static_cast<double>(k)) * std::pow(1.0 - p, static_cast<double>(m - k));
  return prob;
}

double total_drift(const StateTable& table, const std::vector<double>& prob, std::uint64_t x) {
  const std::uint64_t count = std::uint64_t{1} << table.m;
  const double fx = table.f[x];
  const double phix = table.phi[x];
  double drift = 0.0;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const std::uint64_t y = x ^ mask;
    if (table.f[y] <= fx) drift += prob[static_cast<std::size_t>(std::popcount(mask))] * (phix - table.phi[y]);
  }
  return drift;
}

void check_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("mutation probability must lie in (0, 1]");
}

std::string describe(const CompositeObjective& f) {
  std::ostringstream os;
  os << "n=" << f.n() << " s=" << f.s() << " alpha=" << f.alpha().to_string() << " h1=" << f.first().transform.describe()
     << " h2=" << f.second().transform.describe();
  return os.str();
}

}  // namespace

DriftSample exact_drift(const CompositeObjective& f, const PotentialPair& pots, const BitString& x, double p) {
  check_probability(p);
  const std::size_t m = f.size();
  if (m > kMaxExactBits) throw std::invalid_argument("exact_drift: n - s exceeds the enumeration cap of 20 bits");
  if (x.size() != m) throw std::invalid_argument("exact_drift: length of x differs from n - s");

  DriftSample out;
  out.state = x;
  out.phi = eval_phi(f, pots, x);
  out.one_bits = x.one_positions();
  if (f.is_optimal(x)) return out;

  const StateTable table(f, pots);
  const auto prob = mask_probabilities(m, p);
  const std::uint64_t xm = x.to_mask();
  const std::uint64_t count = std::uint64_t{1} << m;
  const std::uint64_t y_ones = xm & table.second;

  for (auto i : out.one_bits) {
    if (auto rank = f.second().embedding.rank(i)) out.single_one.push_back({i, f.second().linear.sorted_index()[*rank], 0.0, 0.0});
  }
  auto single_slot = [&](std::size_t position) -> SingleOneDrift& {
    for (auto& s : out.single_one)
      if (s.position == position) return s;
    throw std::logic_error("exact_drift: missing single-one slot");
  };

  const double fx = table.f[xm];
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const double pr = prob[static_cast<std::size_t>(std::popcount(mask))];
    const std::uint64_t y = xm ^ mask;
    const bool changed = mask != 0 && table.f[y] <= fx;
    const double gain = changed ? pr * (out.phi - table.phi[y]) : 0.0;
    const std::uint64_t hit = mask & y_ones;
    const int hits = std::popcount(hit);
    const EventClass kind = hits == 0 ? EventClass::none : (hits == 1 ? EventClass::single_one : EventClass::multiple_ones);
    auto& cls = out.by_class[static_cast<std::size_t>(kind)];
    cls.probability += pr;
    cls.drift += gain;
    if (kind == EventClass::single_one) {
      auto& slot = single_slot(static_cast<std::size_t>(std::countr_zero(hit)));
      slot.probability += pr;
      slot.drift += gain;
    }
    if (changed) {
      out.drift += gain;
      out.acceptance_probability += pr;
    }
  }
  return out;
}

DriftEstimate monte_carlo_drift(const CompositeObjective& f, const PotentialPair& pots, const BitString& x, double p,
                                std::size_t trials, RandomSource& rng) {
  check_probability(p);
  if (trials < 1000) throw std::invalid_argument("monte_carlo_drift: needs at least 10^3 trials");
  if (x.size() != f.size()) throw std::invalid_argument("monte_carlo_drift: length of x differs from n - s");
  DriftEstimate out;
  out.trials = trials;
  if (f.is_optimal(x)) return out;

  const Eigen::Vector2d parts = f.parts(x);
  const double fx = f.combine(parts);
  std::vector<std::size_t> flips;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    sample_flip_positions(x.size(), p, rng, flips);
    Eigen::Vector2d candidate = parts;
    double change = 0.0;
    for (auto i : flips) {
      const double c = pots.position_coefficients[static_cast<Eigen::Index>(i)];
      if (x[i]) {
        candidate -= f.part_weights(i);
        change += c;
      } else {
        candidate += f.part_weights(i);
        change -= c;
      }
    }
    if (flips.empty() || f.combine(candidate) > fx) change = 0.0;
    sum += change;
    sum_sq += change * change;
  }
  const double count = static_cast<double>(trials);
  out.estimate = sum / count;
  const double var = std::max(0.0, (sum_sq - count * out.estimate * out.estimate) / (count - 1.0));
  out.standard_error = std::sqrt(var / count);
  return out;
}

double reference_delta(const CompositeObjective& f) {
  return std::exp(-3.0) * f.epsilon() / (2.0 * static_cast<double>(f.n()));
}

void DriftReport::finalize() {
  min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& r : records) min_ratio = std::min(min_ratio, r.ratio);
  pass = min_ratio >= delta_ref;
}

std::string DriftReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "state_index,ones,phi,drift,ratio\n";
  for (const auto& r : records) os << r.state_index << ',' << r.ones << ',' << r.phi << ',' << r.drift << ',' << r.ratio << '\n';
  return os.str();
}

nlohmann::json DriftReport::summary_json() const {
  nlohmann::json out;
  out["min_ratio"] = std::isfinite(min_ratio) ? nlohmann::json(min_ratio) : nlohmann::json(nullptr);
  out["delta_ref"] = delta_ref;
  out["epsilon"] = epsilon;
  out["pass"] = pass;
  out["states"] = records.size();
  out["instance"] = instance;
  return out;
}

DriftReport exhaustive_drift_check(const CompositeObjective& f, double p) {
  check_probability(p);
  const std::size_t m = f.size();
  if (m > kMaxSweepBits) throw std::invalid_argument("exhaustive_drift_check: n - s exceeds the all-states cap of 12 bits");
  const PotentialPair pots = build_potentials(f);
  const StateTable table(f, pots);
  const auto prob = mask_probabilities(m, p);

  DriftReport report;
  report.instance = describe(f);
  report.delta_ref = reference_delta(f);
  report.epsilon = f.epsilon();
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < count; ++x) {
    if (table.optimal(x)) continue;
    const double drift = total_drift(table, prob, x);
    report.records.push_back({x, static_cast<std::size_t>(std::popcount(x)), table.phi[x], drift, drift / table.phi[x]});
  }
  report.finalize();
  return report;
}

DriftReport exhaustive_drift_check(const CompositeObjective& f, double p, std::span<const BitString> states) {
  check_probability(p);
  const std::size_t m = f.size();
  if (m > kMaxExactBits) throw std::invalid_argument("exhaustive_drift_check: n - s exceeds the enumeration cap of 20 bits");
  const PotentialPair pots = build_potentials(f);
  const StateTable table(f, pots);
  const auto prob = mask_probabilities(m, p);

  DriftReport report;
  report.instance = describe(f);
  report.delta_ref = reference_delta(f);
  report.epsilon = f.epsilon();
  for (const auto& state : states) {
    if (state.size() != m) throw std::invalid_argument("exhaustive_drift_check: state length differs from n - s");
    const std::uint64_t x = state.to_mask();
    if (table.optimal(x)) continue;
    const double drift = total_drift(table, prob, x);
    report.records.push_back({x, state.one_count(), table.phi[x], drift, drift / table.phi[x]});
  }
  report.finalize();
  return report;
}

}  // namespace translin
