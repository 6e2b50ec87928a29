#include "translin/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace translin {
namespace {

nlohmann::json stage_to_json(const MonotoneTransform::Stage& s) {
  using K = MonotoneTransform::Kind;
  switch (s.kind) {
    case K::identity: return {{"kind", "identity"}};
    case K::square: return {{"kind", "square"}};
    case K::square_root: return {{"kind", "square_root"}};
    case K::power: return {{"kind", "power"}, {"k", s.a}};
    case K::scale: return {{"kind", "scale"}, {"R", s.a}};
    case K::affine: return {{"kind", "affine"}, {"a", s.a}, {"b", s.b}};
  }
  return {};
}

nlohmann::json stages_to_json(std::span<const MonotoneTransform::Stage> stages) {
  if (stages.size() == 1) return stage_to_json(stages[0]);
  return {{"kind", "compose"}, {"outer", stage_to_json(stages.back())}, {"inner", stages_to_json(stages.first(stages.size() - 1))}};
}

std::vector<std::size_t> positions_from_json(const nlohmann::json& j, const char* key) {
  std::vector<std::size_t> out;
  for (const auto& v : j.at(key)) {
    const auto p = v.get<std::int64_t>();
    if (p < 1) throw std::invalid_argument(std::string(key) + ": positions are 1-based");
    out.push_back(static_cast<std::size_t>(p - 1));
  }
  return out;
}

nlohmann::json positions_to_json(std::span<const std::size_t> positions) {
  nlohmann::json out = nlohmann::json::array();
  for (auto p : positions) out.push_back(p + 1);
  return out;
}

Eigen::VectorXd vector_from_json(const nlohmann::json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

nlohmann::json transform_to_json(const MonotoneTransform& h) { return stages_to_json(h.stages()); }

MonotoneTransform transform_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "identity") return MonotoneTransform::identity();
  if (kind == "square") return MonotoneTransform::square();
  if (kind == "square_root") return MonotoneTransform::square_root();
  if (kind == "power") return MonotoneTransform::power(j.at("k").get<double>());
  if (kind == "scale") return MonotoneTransform::scale(j.at("R").get<double>());
  if (kind == "affine") return MonotoneTransform::affine(j.at("a").get<double>(), j.value("b", 0.0));
  if (kind == "compose") return MonotoneTransform::compose(transform_from_json(j.at("outer")), transform_from_json(j.at("inner")));
  throw std::invalid_argument("unknown transform kind '" + kind + "'");
}

nlohmann::json instance_to_json(const CompositeObjective& f) {
  return {{"n", f.n()},
          {"s", f.s()},
          {"alpha_num", f.alpha().num},
          {"alpha_den", f.alpha().den},
          {"weights1", to_std(f.first().linear.weights())},
          {"weights2", to_std(f.second().linear.weights())},
          {"B1", positions_to_json(f.first().embedding.positions())},
          {"B2", positions_to_json(f.second().embedding.positions())},
          {"transform1", transform_to_json(f.first().transform)},
          {"transform2", transform_to_json(f.second().transform)}};
}

CompositeObjective instance_from_json(const nlohmann::json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const auto s = j.at("s").get<std::size_t>();
  if (s >= n) throw std::invalid_argument("instance: s must be smaller than n");
  const Rational alpha{j.at("alpha_num").get<std::int64_t>(), j.at("alpha_den").get<std::int64_t>()};
  const std::size_t m = n - s;
  Subfunction first{LinearFunction(vector_from_json(j.at("weights1"))), DomainEmbedding(positions_from_json(j, "B1"), m),
                    transform_from_json(j.at("transform1"))};
  Subfunction second{LinearFunction(vector_from_json(j.at("weights2"))), DomainEmbedding(positions_from_json(j, "B2"), m),
                     transform_from_json(j.at("transform2"))};
  return CompositeObjective(n, s, alpha, std::move(first), std::move(second));
}

nlohmann::json chance_to_json(const ChanceInstance& c) {
  return {{"m", c.size()}, {"mu", to_std(c.mu())}, {"sigma", to_std(c.sigma())}, {"alpha_c", c.confidence()}};
}

ChanceInstance chance_from_json(const nlohmann::json& j) {
  ChanceInstance c(vector_from_json(j.at("mu")), vector_from_json(j.at("sigma")), j.at("alpha_c").get<double>());
  if (j.contains("m") && j.at("m").get<std::size_t>() != c.size())
    throw std::invalid_argument("chance instance: m does not match the length of mu");
  return c;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cannot parse '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace translin
