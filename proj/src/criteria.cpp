#include "cvtri/criteria.hpp"

#include "cvtri/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvtri {

namespace {

void require_distinct(std::size_t n, std::initializer_list<std::size_t> modes, const char* who) {
  for (auto it = modes.begin(); it != modes.end(); ++it) {
    if (*it >= n) throw std::invalid_argument(std::string(who) + ": mode index out of range");
    for (auto jt = std::next(it); jt != modes.end(); ++jt) {
      if (*it == *jt) throw std::invalid_argument(std::string(who) + ": modes must be distinct");
    }
  }
}

Eigen::VectorXd unit(std::size_t n_modes, Quad q, double weight = 1.0) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * n_modes));
  c(static_cast<Eigen::Index>(q.index(n_modes))) = weight;
  return c;
}

CriterionResult below_bound(CriterionId id, double value, double bound) {
  return CriterionResult{id, value, bound, value < bound, std::nullopt, {}};
}

}  // namespace

std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::ReidProduct: return "reid_product";
    case CriterionId::DuanSimonPlus: return "duan_simon_plus";
    case CriterionId::DuanSimonMinus: return "duan_simon_minus";
    case CriterionId::VlfPair: return "vlf_pair";
    case CriterionId::VlfTrio: return "vlf_trio";
    case CriterionId::WangBound: return "wang_bound";
    case CriterionId::KeyRate: return "key_rate";
  }
  return "unknown";
}

double inferred_variance(const GaussianState& state, Quad target, Quad reference) {
  if (target.kind == reference.kind && target.mode == reference.mode) {
    throw std::invalid_argument("inferred_variance: target and reference coincide");
  }
  const double v_ref = state.variance(reference);
  if (!(v_ref > 0.0)) throw DegenerateInput("inferred_variance: reference variance is zero");
  const double c = state.covariance(target, reference);
  return state.variance(target) - c * c / v_ref;
}

CriterionResult reid_product(const GaussianState& state, std::size_t steered, std::size_t steerer) {
  require_distinct(state.n_modes(), {steered, steerer}, "reid_product");
  const double vx = inferred_variance(state, Quad::x(steered), Quad::x(steerer));
  const double vy = inferred_variance(state, Quad::y(steered), Quad::y(steerer));
  auto result = below_bound(CriterionId::ReidProduct, vx * vy, kReidBound);
  result.steered_mode = steered;
  result.steering_modes = {steerer};
  return result;
}

DuanSimon duan_simon(const GaussianState& state, std::size_t i, std::size_t j) {
  const std::size_t n = state.n_modes();
  require_distinct(n, {i, j}, "duan_simon");
  const Eigen::VectorXd xi = unit(n, Quad::x(i)), xj = unit(n, Quad::x(j));
  const Eigen::VectorXd yi = unit(n, Quad::y(i)), yj = unit(n, Quad::y(j));
  const double plus = combo_variance(state, xi + xj) + combo_variance(state, yi - yj);
  const double minus = combo_variance(state, xi - xj) + combo_variance(state, yi + yj);
  return {below_bound(CriterionId::DuanSimonPlus, plus, kVarianceSumBound),
          below_bound(CriterionId::DuanSimonMinus, minus, kVarianceSumBound)};
}

double vlf_optimal_gain(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k) {
  require_distinct(state.n_modes(), {i, j, k}, "vlf_optimal_gain");
  const double v_k = state.variance(Quad::y(k));
  if (!(v_k > 0.0)) throw DegenerateInput("vlf_optimal_gain: V(Y_k) is zero");
  return -(state.covariance(Quad::y(k), Quad::y(i)) + state.covariance(Quad::y(k), Quad::y(j))) /
         v_k;
}

double vlf_pair_value(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k,
                      double gain) {
  const std::size_t n = state.n_modes();
  require_distinct(n, {i, j, k}, "vlf_pair");
  const Eigen::VectorXd x = unit(n, Quad::x(i)) - unit(n, Quad::x(j));
  const Eigen::VectorXd y = unit(n, Quad::y(i)) + unit(n, Quad::y(j)) + unit(n, Quad::y(k), gain);
  return combo_variance(state, x) + combo_variance(state, y);
}

CriterionResult vlf_pair(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k) {
  const double g = vlf_optimal_gain(state, i, j, k);
  return below_bound(CriterionId::VlfPair, vlf_pair_value(state, i, j, k, g), kVarianceSumBound);
}

CriterionResult vlf_trio(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = state.n_modes();
  require_distinct(n, {i, j, k}, "vlf_trio");
  const double w = 1.0 / std::numbers::sqrt2;
  const Eigen::VectorXd x =
      unit(n, Quad::x(i)) - unit(n, Quad::x(j), w) - unit(n, Quad::x(k), w);
  const Eigen::VectorXd y =
      unit(n, Quad::y(i)) + unit(n, Quad::y(j), w) + unit(n, Quad::y(k), w);
  return below_bound(CriterionId::VlfTrio, combo_variance(state, x) + combo_variance(state, y),
                     kVarianceSumBound);
}

double wang_bound(int n_outputs, int n_steering, double r) {
  if (n_outputs < 2 || n_steering < 1 || n_steering > n_outputs - 1) {
    throw std::invalid_argument("wang_bound: need 1 <= M <= N-1");
  }
  if (!(r >= 0.0)) throw std::invalid_argument("wang_bound: r must be >= 0");
  const double big_n = n_outputs;
  const double m = n_steering;
  const double c = std::cosh(4.0 * r) - 1.0;
  return (2.0 * (m + 1.0) * (big_n - m - 1.0) * c + big_n * big_n) /
         (2.0 * m * (big_n - m) * c + big_n * big_n);
}

double key_rate_threshold() {
  const double q = 2.0 / std::numbers::e;
  return q * q;
}

CriterionResult key_rate(double reid_value) {
  if (!(reid_value > 0.0)) throw std::invalid_argument("key_rate: reid value must be positive");
  // log2(2/(e sqrt(p))) rewritten so the boundary p = (2/e)^2 gives exactly 0.
  const double k = 0.5 * std::log2(key_rate_threshold() / reid_value);
  return CriterionResult{CriterionId::KeyRate, k, kKeyRateBound, k > kKeyRateBound, std::nullopt,
                         {}};
}

}  // namespace cvtri
