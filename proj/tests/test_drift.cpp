#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "translin/drift.hpp"
#include "translin/drift_bounds.hpp"
#include "translin/potential.hpp"

using namespace translin;

namespace {

CompositeObjective random_instance(RandomSource& rng, std::size_t n, std::size_t s, MonotoneTransform h1,
                                   MonotoneTransform h2, EmbeddingScheme emb = EmbeddingScheme::random) {
  GenerationSpec spec;
  spec.n = n;
  spec.s = s;
  spec.transform1 = std::move(h1);
  spec.transform2 = std::move(h2);
  spec.embedding = emb;
  return generate_instance(spec, rng);
}

}  // namespace

TEST_CASE("potential coefficients") {
  const double w[] = {3, 5, 5, 7};
  const PotentialFunction pot(w, 8);
  CHECK(pot.coefficient(0) == 1.0);
  CHECK(pot.coefficient(1) == 1.125);
  CHECK(pot.coefficient(2) == 1.125);
  CHECK(pot.coefficient(3) == 1.423828125);
  CHECK(pot.beta(2) == 1);
  const double unsorted[] = {2, 1};
  CHECK_THROWS(PotentialFunction(unsorted, 8));

  std::vector<double> inc(16);
  for (std::size_t i = 0; i < inc.size(); ++i) inc[i] = static_cast<double>(i + 1);
  const PotentialFunction geo(inc, 16);
  CHECK(geo.coefficient(15) == doctest::Approx(std::pow(17.0 / 16.0, 15)).epsilon(1e-15));
  CHECK(geo.coefficient(15) <= std::numbers::e);

  RandomSource rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    const auto f = random_instance(rng, 12, 3, MonotoneTransform::identity(), MonotoneTransform::square());
    const auto pots = build_potentials(f);
    CHECK(eval_phi(f, pots, BitString(f.size(), true)) <= 2.0 * std::numbers::e * static_cast<double>(f.size()));
    const auto flat = oracle::flatten(f);
    const oracle::Phi g{oracle::potential(flat.p1, f.n()), oracle::potential(flat.p2, f.n())};
    for (std::uint64_t mask = 0; mask < 512; mask += 7)
      CHECK(eval_phi(f, pots, BitString::from_mask(mask, 9)) == doctest::Approx(oracle::phi(flat, g, mask)).epsilon(1e-14));
  }
}

TEST_CASE("zero-gain series") {
  CHECK(zero_gain_series(8, 8) == doctest::Approx(std::pow(1.125, 8) - 1.0).epsilon(1e-14));
  CHECK(zero_gain_series(8, 8) == doctest::Approx(1.5658).epsilon(1e-4));
  CHECK(zero_gain_series(50, 100) == doctest::Approx(0.6446).epsilon(1e-4));
  CHECK(zero_gain_series(50, 100) <= std::exp(0.5) - 1.0);
  CHECK(zero_gain_series(0, 5) == 0.0);
}

TEST_CASE("single-flip drift value") {
  const double w[] = {1, 2, 3, 4};
  const PotentialFunction pot(w, 8);
  // beta = 3 in 1-based terms: 1.125^2 - (1 + 1.125)/8
  CHECK(single_flip_drift_value(pot, 2) == doctest::Approx(1.265625 - 2.125 / 8.0).epsilon(1e-15));
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(single_flip_drift_value(pot, i) - 1.0) < 1e-12);
}

TEST_CASE("event classes") {
  const auto f = onemax_instance(8, 2);  // B1 = {0..3}, B2 = {2..5}
  const BitString x = BitString::from_string("111111");
  CHECK(classify_event(x, make_event(x, {2, 4}), f).kind == EventClass::multiple_ones);
  CHECK(classify_event(x, make_event(x, {0, 1, 3, 5}), f).kind == EventClass::multiple_ones);
  CHECK(classify_event(x, make_event(x, {0, 1}), f).kind == EventClass::none);
  const auto single = classify_event(x, make_event(x, {0, 4}), f);
  CHECK(single.kind == EventClass::single_one);
  CHECK(single.flipped_position == 4);

  const BitString y = BitString::from_string("000100");
  const auto c = classify_event(y, make_event(y, {2, 3}), f);
  CHECK(c.kind == EventClass::single_one);
  CHECK(c.zero_flips_below_beta == false);  // all weights tie, beta(i*) = 0
}

TEST_CASE("exact drift by hand and against the brute-force oracle") {
  const auto tiny = onemax_instance(2, 1);
  const auto tiny_pots = build_potentials(tiny);
  // the lone bit sits in both parts, so clearing it drops phi by g1 + g2 = 2
  const auto d = exact_drift(tiny, tiny_pots, BitString::from_string("1"), 0.5);
  CHECK(d.phi == 2.0);
  CHECK(d.drift == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.acceptance_probability == doctest::Approx(0.5));

  const auto om = onemax_instance(8);
  const auto om_drift = exact_drift(om, build_potentials(om), BitString(8, true), 1.0 / 8.0);
  const double expected = oracle::drift(oracle::flatten(om), 0xFF, 1.0 / 8.0);
  CHECK(std::fabs(om_drift.drift - expected) <= 1e-12 * std::fabs(expected));

  RandomSource rng(19);
  const MonotoneTransform hs[] = {MonotoneTransform::identity(), MonotoneTransform::square(), MonotoneTransform::square_root(),
                                  parse_transform("scale:3*sqrt")};
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 6 + 2 * rng.uniform_int(0, 3);
    const std::size_t s = rng.uniform_int(0, n / 2);
    const auto f = random_instance(rng, n, s, hs[rng.uniform_int(0, 3)], hs[rng.uniform_int(0, 3)]);
    const auto pots = build_potentials(f);
    const auto flat = oracle::flatten(f);
    const double p = f.default_mutation_probability();
    for (int k = 0; k < 5; ++k) {
      const auto mask = rng.uniform_int(0, (std::uint64_t{1} << f.size()) - 1);
      const auto x = BitString::from_mask(mask, f.size());
      const auto sample = exact_drift(f, pots, x, p);
      if (f.is_optimal(x)) {
        CHECK(sample.drift == 0.0);
        continue;
      }
      const double ref = oracle::drift(flat, mask, p);
      REQUIRE(std::fabs(sample.drift - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
      double split = 0.0, prob = 0.0;
      for (const auto& c : sample.by_class) {
        split += c.drift;
        prob += c.probability;
      }
      CHECK(split == doctest::Approx(sample.drift).epsilon(1e-12));
      CHECK(prob == doctest::Approx(1.0).epsilon(1e-12));
      // a lone one-bit flip is always accepted and never raises phi
      for (auto i : x.one_positions()) {
        auto y = x;
        y.flip(i);
        CHECK(f(y) <= f(x));
      }
    }
  }
}

TEST_CASE("Monte-Carlo drift") {
  RandomSource rng(23);
  const auto f = random_instance(rng, 12, 2, MonotoneTransform::square(), MonotoneTransform::square_root());
  const auto pots = build_potentials(f);
  const double p = f.default_mutation_probability();
  for (int rep = 0; rep < 5; ++rep) {
    const auto x = uniform_bitstring(f.size(), rng);
    if (f.is_optimal(x)) continue;
    const double exact = exact_drift(f, pots, x, p).drift;
    RandomSource mc(5, rep);
    const auto est = monte_carlo_drift(f, pots, x, p, 20000, mc);
    CHECK(std::fabs(est.estimate - exact) <= 4.0 * est.standard_error);
  }
  const BitString x(f.size(), true);
  RandomSource a(6), b(6, 1);
  const auto e1 = monte_carlo_drift(f, pots, x, p, 20000, a);
  const auto e2 = monte_carlo_drift(f, pots, x, p, 40000, b);
  CHECK(e2.standard_error / e1.standard_error == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
  CHECK_THROWS(monte_carlo_drift(f, pots, x, p, 10, a));
  const auto zero = monte_carlo_drift(f, pots, BitString(f.size()), p, 1000, a);
  CHECK(zero.estimate == 0.0);
}

TEST_CASE("exhaustive drift certification") {
  const auto om = onemax_instance(8);
  const auto report = exhaustive_drift_check(om, 1.0 / 8.0);
  CHECK(report.delta_ref == doctest::Approx(std::exp(-3.0) * (2.0 - std::exp(0.5)) / 16.0).epsilon(1e-14));
  CHECK(report.delta_ref == doctest::Approx(0.001093).epsilon(1e-3));
  CHECK(report.pass);
  CHECK(report.records.size() == 255);
  CHECK(report.min_ratio >= report.delta_ref);

  RandomSource rng(29);
  GenerationSpec spec;
  spec.n = 8;
  spec.transform1 = MonotoneTransform::square();
  spec.transform2 = MonotoneTransform::square_root();
  const auto sep = generate_instance(spec, rng);
  const auto sep_report = exhaustive_drift_check(sep, sep.default_mutation_probability());
  CHECK(sep_report.pass);

  // a single one-bit state
  const BitString planted = BitString::unit(sep.size(), 5);
  const BitString states[] = {planted};
  const auto one = exhaustive_drift_check(sep, sep.default_mutation_probability(), states);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].ratio >= one.delta_ref);

  const auto csv = report.to_csv();
  CHECK(csv.rfind("state_index,ones,phi,drift,ratio\n", 0) == 0);
  CHECK(report.summary_json()["pass"] == true);
}

TEST_CASE("multiplicative drift bounds") {
  const auto b = multiplicative_drift_bounds(std::numbers::e * 2.0, 2.0, 0.5, std::vector<double>{3.0});
  CHECK(b.expected_time == doctest::Approx(4.0).epsilon(1e-15));
  REQUIRE(b.tails.size() == 1);
  CHECK(b.tails[0].probability_bound == doctest::Approx(0.0498).epsilon(1e-3));
  CHECK(b.tails[0].threshold == doctest::Approx((1.0 + 3.0) / 0.5));
  CHECK(b.threshold(0.0) == doctest::Approx(2.0));
  CHECK_THROWS(multiplicative_drift_bounds(1.0, 2.0, 0.5));
  CHECK_THROWS(multiplicative_drift_bounds(2.0, 1.0, 0.0));
  CHECK_THROWS(multiplicative_drift_bounds(2.0, 1.0, 0.5, std::vector<double>{-1.0}));
}
