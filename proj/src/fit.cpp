#include "translin/fit.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace translin {
namespace {

void require_distinct(std::span<const FitPoint> rows) {
  std::set<double> distinct;
  for (const auto& r : rows) {
    if (!(r.n > 0.0) || !(r.value > 0.0)) throw std::invalid_argument("fit: n and values must be positive");
    distinct.insert(r.n);
  }
  if (distinct.size() < 3) throw std::invalid_argument("fit: needs at least 3 distinct n");
}

}  // namespace

PowerFit fit_power(std::span<const FitPoint> rows) {
  require_distinct(rows);
  const auto count = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd design(count, 2);
  Eigen::VectorXd target(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::log(rows[static_cast<std::size_t>(i)].n);
    target[i] = std::log(rows[static_cast<std::size_t>(i)].value);
  }
  const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(target);
  const Eigen::VectorXd residual = target - design * beta;
  return {std::exp(beta[0]), beta[1], std::sqrt(residual.squaredNorm() / static_cast<double>(count))};
}

FitResult fit_nlogn(std::span<const FitPoint> rows) {
  require_distinct(rows);
  const auto count = static_cast<Eigen::Index>(rows.size());
  Eigen::VectorXd basis(count);
  Eigen::VectorXd target(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const double n = rows[static_cast<std::size_t>(i)].n;
    if (!(n > 1.0)) throw std::invalid_argument("fit_nlogn: n must exceed 1");
    basis[i] = n * std::log(n);
    target[i] = rows[static_cast<std::size_t>(i)].value;
  }
  FitResult out;
  out.points = rows.size();
  out.nlogn_coefficient = basis.dot(target) / basis.squaredNorm();
  out.nlogn_rms_residual = std::sqrt((target - out.nlogn_coefficient * basis).squaredNorm() / static_cast<double>(count));
  out.power = fit_power(rows);
  return out;
}

nlohmann::json FitResult::to_json() const {
  return {{"points", points},
          {"nlogn", {{"c", nlogn_coefficient}, {"rms_residual", nlogn_rms_residual}}},
          {"power", {{"a", power.coefficient}, {"q", power.exponent}, {"rms_log_residual", power.rms_log_residual}}}};
}

}  // namespace translin
