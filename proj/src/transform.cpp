#include "translin/transform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace translin {
namespace {

// Input lower bound needed by a stage for it to be monotone.
bool needs_nonnegative_input(MonotoneTransform::Kind kind) {
  using K = MonotoneTransform::Kind;
  return kind == K::square || kind == K::square_root || kind == K::power;
}

double apply(const MonotoneTransform::Stage& s, double v) {
  using K = MonotoneTransform::Kind;
  switch (s.kind) {
    case K::identity: return v;
    case K::square: return v * v;
    case K::square_root: return std::sqrt(v);
    case K::power: return std::pow(v, s.a);
    case K::scale: return s.a * v;
    case K::affine: return s.a * v + s.b;
  }
  return v;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

MonotoneTransform::MonotoneTransform(Stage stage) : stages_{stage} {}

MonotoneTransform::MonotoneTransform(std::vector<Stage> stages) : stages_(std::move(stages)) {
  double floor = 0.0;
  for (const auto& s : stages_) {
    if (needs_nonnegative_input(s.kind) && floor < 0.0)
      throw std::invalid_argument("MonotoneTransform: stage receives negative inputs and would not be monotone");
    floor = apply(s, floor);
  }
}

MonotoneTransform MonotoneTransform::power(double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) throw std::invalid_argument("power transform: exponent must be > 0");
  return MonotoneTransform(Stage{Kind::power, exponent});
}

MonotoneTransform MonotoneTransform::scale(double factor) {
  if (!(factor >= 0.0) || !std::isfinite(factor)) throw std::invalid_argument("scale transform: factor must be >= 0");
  return MonotoneTransform(Stage{Kind::scale, factor});
}

MonotoneTransform MonotoneTransform::affine(double slope, double offset) {
  if (!(slope >= 0.0) || !std::isfinite(slope) || !std::isfinite(offset))
    throw std::invalid_argument("affine transform: slope must be >= 0 and finite");
  return MonotoneTransform(Stage{Kind::affine, slope, offset});
}

MonotoneTransform MonotoneTransform::compose(const MonotoneTransform& outer, const MonotoneTransform& inner) {
  std::vector<Stage> stages = inner.stages_;
  stages.insert(stages.end(), outer.stages_.begin(), outer.stages_.end());
  return MonotoneTransform(std::move(stages));
}

double MonotoneTransform::operator()(double v) const noexcept {
  for (const auto& s : stages_) v = apply(s, v);
  return v;
}

double MonotoneTransform::image_floor() const noexcept { return (*this)(0.0); }

std::string MonotoneTransform::describe() const {
  std::string out;
  for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
    if (!out.empty()) out += '*';
    switch (it->kind) {
      case Kind::identity: out += "identity"; break;
      case Kind::square: out += "square"; break;
      case Kind::square_root: out += "square_root"; break;
      case Kind::power: out += "power:" + format_number(it->a); break;
      case Kind::scale: out += "scale:" + format_number(it->a); break;
      case Kind::affine: out += "affine:" + format_number(it->a) + ":" + format_number(it->b); break;
    }
  }
  return out;
}

MonotoneTransform parse_transform(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, '*');) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty transform description");

  auto parse_one = [](const std::string& item) {
    std::vector<std::string> fields;
    std::stringstream fs(item);
    for (std::string f; std::getline(fs, f, ':');) fields.push_back(f);
    if (fields.empty()) throw std::invalid_argument("empty transform stage");
    auto number = [&](std::size_t i) {
      if (i >= fields.size()) throw std::invalid_argument("transform '" + item + "' is missing a parameter");
      std::size_t used = 0;
      double v = std::stod(fields[i], &used);
      if (used != fields[i].size()) throw std::invalid_argument("bad number in transform '" + item + "'");
      return v;
    };
    const std::string& name = fields[0];
    if (name == "identity") return MonotoneTransform::identity();
    if (name == "square") return MonotoneTransform::square();
    if (name == "square_root" || name == "sqrt") return MonotoneTransform::square_root();
    if (name == "power") return MonotoneTransform::power(number(1));
    if (name == "scale") return MonotoneTransform::scale(number(1));
    if (name == "affine") return MonotoneTransform::affine(number(1), number(2));
    throw std::invalid_argument("unknown transform '" + name + "'");
  };

  MonotoneTransform out = parse_one(parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = MonotoneTransform::compose(parse_one(parts[i]), out);
  return out;
}

}  // namespace translin
