#include "translin/ea.hpp"

#include <cmath>
#include <stdexcept>

namespace translin {

EAConfig EAConfig::for_dimension(std::size_t n, std::uint64_t max_iterations, std::uint64_t trace_stride) {
  if (n == 0) throw std::invalid_argument("EAConfig: dimension must be positive");
  EAConfig config{1.0 / static_cast<double>(n), max_iterations, trace_stride};
  config.validate();
  return config;
}

void EAConfig::validate() const {
  if (!(mutation_probability > 0.0 && mutation_probability <= 1.0))
    throw std::invalid_argument("EAConfig: mutation probability must lie in (0, 1]");
  if (max_iterations == 0) throw std::invalid_argument("EAConfig: max_iterations must be positive");
}

BitString uniform_bitstring(std::size_t length, RandomSource& rng) {
  BitString x(length);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = rng.next_u64();
    x.set(i, (word >> (i % 64)) & 1U);
  }
  return x;
}

nlohmann::json to_json(const RunTrace& trace) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : trace.samples) {
    nlohmann::json phi = std::isnan(s.phi) ? nlohmann::json(nullptr) : nlohmann::json(s.phi);
    samples.push_back({s.iteration, s.f, phi, s.ones});
  }
  nlohmann::json out;
  out["seed"] = trace.seed;
  out["stream"] = trace.stream;
  out["hitting_time"] = trace.hitting_time ? nlohmann::json(*trace.hitting_time) : nlohmann::json(nullptr);
  out["budget_exhausted"] = trace.budget_exhausted();
  out["accepted_steps"] = trace.accepted_steps;
  out["samples"] = std::move(samples);
  return out;
}

}  // namespace translin
