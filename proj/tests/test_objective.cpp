#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>

#include "oracles.hpp"
#include "translin/instance_io.hpp"
#include "translin/linear.hpp"
#include "translin/multimodal.hpp"
#include "translin/objective.hpp"
#include "translin/transform.hpp"

using namespace translin;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("linear evaluation and ordering") {
  const LinearFunction fn(vec({3, 5, 7}));
  CHECK(eval_linear(fn, BitString::from_string("101")) == 10.0);

  const LinearFunction ties(vec({5, 3, 7, 5}));
  CHECK(ties.sorted_weights() == vec({3, 5, 5, 7}));
  CHECK(std::vector<std::size_t>(ties.order().begin(), ties.order().end()) == std::vector<std::size_t>{1, 0, 3, 2});
  CHECK(ties.first_equal(2) == 1);
  CHECK(ties.first_equal(3) == 3);
  for (std::size_t i = 0; i < 4; ++i) CHECK(ties.order()[ties.sorted_index()[i]] == i);

  CHECK_THROWS(LinearFunction(vec({1, -1})));
  CHECK_THROWS(LinearFunction(Eigen::VectorXd()));
  CHECK_THROWS(LinearFunction(vec({1, NAN})));

  const DomainEmbedding emb({0, 2}, 4);
  CHECK(eval_extended(LinearFunction(vec({2, 9})), emb, BitString::from_string("1010")) == 11.0);
  CHECK(emb.rank(2) == 1);
  CHECK_FALSE(emb.contains(1));
  CHECK_THROWS(DomainEmbedding({2, 1}, 4));
  CHECK_THROWS(DomainEmbedding({0, 4}, 4));
}

TEST_CASE("transforms") {
  CHECK(MonotoneTransform::square()(3.0) == 9.0);
  CHECK(MonotoneTransform::square_root()(16.0) == 4.0);
  CHECK(MonotoneTransform::power(3)(2.0) == doctest::Approx(8.0));
  const auto h = MonotoneTransform::compose(MonotoneTransform::scale(2), MonotoneTransform::square_root());
  CHECK(h(9.0) == 6.0);
  CHECK(h.describe() == "scale:2*square_root");
  CHECK(parse_transform("scale:2*sqrt") == h);
  CHECK(parse_transform(h.describe()) == h);
  CHECK(parse_transform("affine:2:-1")(3.0) == 5.0);
  CHECK_THROWS(parse_transform("cube"));
  CHECK_THROWS(MonotoneTransform::power(-1));
  CHECK_THROWS(MonotoneTransform::scale(-1));
  // a root of a possibly negative value is refused
  CHECK_THROWS(MonotoneTransform::compose(MonotoneTransform::square_root(), MonotoneTransform::affine(1, -1)));
  for (const char* text : {"identity", "square", "sqrt", "power:1.5", "scale:3*square", "affine:1:2*sqrt"}) {
    const auto t = parse_transform(text);
    for (double v = 0.0; v < 50.0; v += 0.7) CHECK(t(v) <= t(v + 0.7));
    CHECK(transform_from_json(transform_to_json(t)) == t);
  }
}

TEST_CASE("composite evaluation") {
  const double w1[] = {1, 2}, w2[] = {3, 4};
  const auto f = build_separable(w1, w2);
  CHECK(f(BitString::from_string("1101")) == 11.0);
  CHECK(f.n() == 4);
  CHECK(f.s() == 0);

  const double a1[] = {1}, a2[] = {1};
  CHECK(build_separable(a1, a2)(BitString::from_string("11")) == 2.0);
  const double b1[] = {2, 3}, b2[] = {5, 5};
  CHECK(build_separable(b1, b2)(BitString::from_string("1111")) == doctest::Approx(25.0 + std::sqrt(10.0)).epsilon(1e-15));

  // full overlap: both parts see the same two bits
  Subfunction one{LinearFunction(vec({1, 1})), DomainEmbedding({0, 1}, 2), MonotoneTransform::identity()};
  Subfunction two{LinearFunction(vec({1, 1})), DomainEmbedding({0, 1}, 2),
                  MonotoneTransform::compose(MonotoneTransform::scale(2), MonotoneTransform::square_root())};
  const CompositeObjective chance_form(4, 2, {1, 2}, one, two);
  CHECK(chance_form(BitString::from_string("11")) == doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(chance_form.epsilon() == doctest::Approx(2.0 - std::exp(0.5)));
  CHECK_THROWS(eval_composite(chance_form, BitString::from_string("1")));
}

TEST_CASE("constructor invariants") {
  Subfunction a{LinearFunction(vec({1, 1})), DomainEmbedding({0, 1}, 4), MonotoneTransform::identity()};
  Subfunction b{LinearFunction(vec({1, 1})), DomainEmbedding({2, 3}, 4), MonotoneTransform::identity()};
  CHECK_NOTHROW(CompositeObjective(4, 0, {1, 2}, a, b));
  CHECK_THROWS(CompositeObjective(4, 0, {7, 10}, a, b));  // alpha >= ln 2
  CHECK_THROWS(CompositeObjective(4, 0, {1, 3}, a, b));   // alpha < 1/2
  Subfunction gap{LinearFunction(vec({1, 1})), DomainEmbedding({1, 2}, 4), MonotoneTransform::identity()};
  CHECK_THROWS(CompositeObjective(4, 0, {1, 2}, a, gap));  // position 3 uncovered
  CHECK_THROWS(validate_dimensions(7, 0, {1, 2}));
  CHECK_THROWS(validate_dimensions(8, 5, {1, 2}));
  CHECK_NOTHROW(validate_dimensions(8, 4, {1, 2}));
  CHECK_NOTHROW(validate_dimensions(10, 0, {3, 5}));
}

TEST_CASE("generated instances have the requested layout") {
  GenerationSpec spec;
  spec.n = 8;
  spec.s = 2;
  RandomSource rng(1);
  const auto f = generate_instance(spec, rng);
  const auto b1 = f.first().embedding.positions();
  const auto b2 = f.second().embedding.positions();
  CHECK(std::vector<std::size_t>(b1.begin(), b1.end()) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(std::vector<std::size_t>(b2.begin(), b2.end()) == std::vector<std::size_t>{2, 3, 4, 5});
  for (Eigen::Index i = 0; i < f.first().linear.weights().size(); ++i) {
    CHECK(f.first().linear.weights()[i] >= 1);
    CHECK(f.first().linear.weights()[i] <= 100);
    CHECK(f.first().linear.weights()[i] == std::floor(f.first().linear.weights()[i]));
  }

  spec.embedding = EmbeddingScheme::random;
  spec.n = 20;
  spec.s = 6;
  spec.weights = WeightScheme::exponential_doubling;
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = generate_instance(spec, rng);
    CHECK(g.size() == 14);
    CHECK(g.first().embedding.size() == 10);
    CHECK(g.second().embedding.size() == 10);
    std::size_t overlap = 0;
    for (auto p : g.first().embedding.positions()) overlap += g.second().embedding.contains(p) ? 1 : 0;
    CHECK(overlap == 6);
  }
  CHECK(parse_weight_scheme(to_string(WeightScheme::all_ones)) == WeightScheme::all_ones);
  CHECK(parse_embedding_scheme("random") == EmbeddingScheme::random);
  CHECK_THROWS(parse_weight_scheme("gaussian"));
}

TEST_CASE("separable objective matches its closed form on every point") {
  RandomSource rng(17);
  for (std::size_t n : {2, 4, 6, 8, 10, 12}) {
    std::vector<double> w1(n / 2), w2(n / 2);
    for (auto& w : w1) w = static_cast<double>(rng.uniform_int(1, 100));
    for (auto& w : w2) w = static_cast<double>(rng.uniform_int(1, 100));
    const auto f = build_separable(w1, w2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      double a = 0.0, b = 0.0;
      for (std::size_t i = 0; i < n / 2; ++i) {
        if ((mask >> i) & 1U) a += w1[i];
        if ((mask >> (i + n / 2)) & 1U) b += w2[i];
      }
      REQUIRE(f(BitString::from_mask(mask, n)) == doctest::Approx(a * a + std::sqrt(b)).epsilon(1e-14));
    }
  }
}

TEST_CASE("optimality agrees with exhaustive minimisation") {
  // position 2 (0-based) carries weight 0 in both parts: e_3 is optimal
  Subfunction a{LinearFunction(vec({1, 2, 0})), DomainEmbedding({0, 1, 2}, 4), MonotoneTransform::square()};
  Subfunction b{LinearFunction(vec({4, 0, 3})), DomainEmbedding({1, 2, 3}, 4), MonotoneTransform::square_root()};
  const CompositeObjective f(6, 2, {1, 2}, a, b);
  CHECK(f.is_optimal(BitString::unit(4, 2)));
  CHECK_FALSE(f.is_optimal(BitString::unit(4, 0)));

  RandomSource rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    GenerationSpec spec;
    spec.n = 12;
    spec.s = 3;
    spec.weight_lo = 0;
    spec.weight_hi = 2;
    spec.embedding = EmbeddingScheme::random;
    spec.transform1 = MonotoneTransform::square();
    const auto g = generate_instance(spec, rng);
    const auto flat = oracle::flatten(g);
    double best = INFINITY;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) best = std::min(best, oracle::value(flat, mask));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
      const auto x = BitString::from_mask(mask, g.size());
      REQUIRE(g.is_optimal(x) == (oracle::value(flat, mask) == best));
      REQUIRE(g(x) == doctest::Approx(oracle::value(flat, mask)).epsilon(1e-14));
    }
  }
}

TEST_CASE("multimodal counterexample") {
  const MultimodalInstance inst(4, 16);
  CHECK(inst(BitString::from_string("1000")) == doctest::Approx(0.5 + std::pow(3.0 / 3.5, 16)).epsilon(1e-14));
  CHECK(inst(BitString::from_string("1111")) == 3.5);
  const double top = inst(BitString::from_string("0000"));
  CHECK(top == doctest::Approx(std::pow(4.0 / 3.5, 16)).epsilon(1e-14));
  for (std::size_t i = 0; i < 4; ++i) CHECK(inst(BitString::unit(4, i)) < top);
  CHECK(MultimodalInstance(5).exponent() == 25);

  for (std::size_t n = 4; n <= 12; ++n) {
    const auto verdict = verify_multimodal_structure(MultimodalInstance(n));
    CHECK(verdict.single_ones_are_strict_local_optima);
    CHECK(verdict.unique_global_minimum_at_first_unit);
  }
  // every Hamming neighbour of a planted point is strictly worse
  const MultimodalInstance four(4);
  for (std::size_t pos = 1; pos < 4; ++pos) {
    const auto x = BitString::unit(4, pos);
    for (std::size_t j = 0; j < 4; ++j) {
      auto y = x;
      y.flip(j);
      CHECK(four(y) > four(x));
    }
  }
  CHECK(four.is_optimal(four.global_optimum()));
  CHECK_THROWS(MultimodalInstance(1));
}

TEST_CASE("instance files round trip") {
  GenerationSpec spec;
  spec.n = 10;
  spec.s = 3;
  spec.embedding = EmbeddingScheme::random;
  spec.transform1 = parse_transform("scale:2*sqrt");
  spec.transform2 = MonotoneTransform::power(1.5);
  RandomSource rng(8);
  const auto f = generate_instance(spec, rng);
  const auto j = instance_to_json(f);
  CHECK(j["B1"][0].get<int>() >= 1);  // 1-based on disk
  const auto g = instance_from_json(j);
  CHECK(instance_to_json(g) == j);
  for (std::uint64_t mask = 0; mask < 128; ++mask) CHECK(g(BitString::from_mask(mask, 7)) == f(BitString::from_mask(mask, 7)));

  const auto path = (std::filesystem::temp_directory_path() / "translin_instance_test.json").string();
  write_text_file(path, j.dump());
  CHECK(instance_from_json(read_json_file(path)) .n() == 10);
  std::filesystem::remove(path);
  CHECK_THROWS(read_json_file("/nonexistent/dir/file.json"));

  auto bad = j;
  bad["B1"][0] = 0;
  CHECK_THROWS(instance_from_json(bad));
}
