#include "cvtri/asym_tw.hpp"

#include "cvtri/criteria.hpp"
#include "cvtri/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace cvtri {

AsymParams::AsymParams(double kappa1, double kappa2, CoefficientMode mode)
    : kappa1_(kappa1), kappa2_(kappa2), zeta_(0.0), mode_(mode) {
  if (!(kappa2 >= 0.0) || !(kappa1 > kappa2) || !std::isfinite(kappa1)) {
    throw std::invalid_argument("AsymParams: need kappa1 > kappa2 >= 0");
  }
  zeta_ = std::sqrt(kappa1 * kappa1 - kappa2 * kappa2);
}

AsymParams AsymParams::with_ratio(double kappa_ratio, CoefficientMode mode) {
  return AsymParams(1.0, kappa_ratio, mode);
}

CoefficientSet coefficient_set(const AsymParams& params, double zt) {
  if (!(zt >= 0.0)) throw std::invalid_argument("coefficient_set: zt must be >= 0");
  // Only the ratio k2/k1 matters once time is measured in units of 1/zeta.
  const double k1 = 1.0;
  const double k2 = params.kappa2() / params.kappa1();
  const double z2 = k1 * k1 - k2 * k2;
  const double ch = std::cosh(zt);
  const double sh = std::sinh(zt);
  const double sinh_scale = params.mode() == CoefficientMode::Canonical ? std::sqrt(z2) : z2;

  CoefficientSet c{};
  c.alpha = (k1 * k1 * ch - k2 * k2) / z2;
  c.beta = k1 * k2 * (ch - 1.0) / z2;
  c.gamma = k1 * sh / sinh_scale;
  c.delta = (k1 * k1 - k2 * k2 * ch) / z2;
  c.epsilon = k2 * sh / sinh_scale;
  c.eta = ch;
  return c;
}

QuadratureMap tw_transform(const AsymParams& params, double zt) {
  const CoefficientSet c = coefficient_set(params, zt);
  const double mid = params.mode() == CoefficientMode::Canonical ? c.epsilon : c.gamma;
  Eigen::Matrix3d mx;
  mx << c.alpha, -c.beta, c.gamma,
        c.beta, c.delta, mid,
        c.gamma, -c.epsilon, c.eta;
  Eigen::Matrix3d my;
  my << c.alpha, c.beta, -c.gamma,
        -c.beta, c.delta, mid,
        -c.gamma, -c.epsilon, c.eta;
  return QuadratureMap::from_blocks(mx, my);
}

GaussianState tw_state(const AsymParams& params, double zt) {
  const QuadratureMap m = tw_transform(params, zt);
  Eigen::MatrixXd cov = m.mat() * m.mat().transpose();
  if (params.mode() == CoefficientMode::PaperLiteral) {
    // M M^T from the printed coefficients is not a physical covariance.
    return GaussianState::without_uncertainty_check(std::move(cov));
  }
  return GaussianState(std::move(cov));
}

MomentTable moment_table(const CoefficientSet& c, CoefficientMode mode) {
  const auto& [a, b, g, d, e, h] = c;
  // Third coefficient of the mode-1 rows.
  const double m = mode == CoefficientMode::Canonical ? e : g;
  MomentTable t{};
  t.x00 = a * a + b * b + g * g;
  t.x11 = b * b + d * d + m * m;
  t.x22 = g * g + e * e + h * h;
  t.x01 = a * b - b * d + g * m;
  t.x02 = a * g + b * e + g * h;
  t.x12 = g * b - d * e + m * h;
  t.y01 = -a * b + b * d - g * m;
  t.y02 = -a * g - b * e - g * h;
  t.y12 = b * g - d * e + m * h;
  return t;
}

LiteralSteeringFormulas literal_steering_formulas(const CoefficientSet& c) {
  const auto& [a, b, g, d, e, h] = c;
  const double v0 = a * a + b * b + g * g;
  const double v2 = g * g + e * e + h * h;
  const double c02 = a * g + b * e + g * h;
  const double n02 = v0 * v2 - c02 * c02;
  const double n20 = (a * a + e * e + h * h) * (b * b + g * g + d * d) - c02 * c02;
  const double v1 = b * b + d * d + g * g;
  return {n02 * n02 / (v2 * v2), n20 * n20 / (v1 * v1)};
}

SteeringPair tw_steering(const AsymParams& params, double zt) {
  const GaussianState s = tw_state(params, zt);
  return {reid_product(s, 0, 2).value, reid_product(s, 2, 0).value};
}

std::optional<KeyWindow> key_window(const AsymParams& params, std::size_t steered,
                                    std::size_t steerer, double zt_max) {
  if (!((steered == 0 && steerer == 2) || (steered == 2 && steerer == 0))) {
    throw std::invalid_argument("key_window: direction must be (0,2) or (2,0)");
  }
  if (!(zt_max > kWindowScanStep)) throw std::invalid_argument("key_window: zt_max too small");

  const auto rate = [&](double zt) {
    return key_rate(reid_product(tw_state(params, zt), steered, steerer).value).value;
  };
  const auto steps = static_cast<std::size_t>(std::llround(zt_max / kWindowScanStep));
  const std::vector<oracle::Bracket> brackets = oracle::bracket_roots(rate, 0.0, zt_max, steps);

  // Walk the sign changes and collect every positive stretch.
  std::vector<KeyWindow> windows;
  bool inside = rate(0.0) > 0.0;
  double start = 0.0;
  for (const auto& br : brackets) {
    const double root = oracle::bisect(rate, br, kWindowRootTol);
    if (!inside) {
      start = root;
      inside = true;
    } else {
      windows.push_back({start, root, true});
      inside = false;
    }
  }
  if (inside) windows.push_back({start, zt_max, false});

  std::optional<KeyWindow> best;
  for (const auto& w : windows) {
    if (!best || w.hi - w.lo > best->hi - best->lo) best = w;
  }
  return best;
}

}  // namespace cvtri
