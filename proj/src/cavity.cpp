#include "cvtri/cavity.hpp"

#include "cvtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cvtri {

namespace {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix<Complex, 3, 3>;

void validate(const CavityParams& p) {
  for (double rate : {p.gamma0, p.gamma1, p.gamma2, p.gamma3}) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
      throw std::invalid_argument("CavityParams: decay rates must be positive");
    }
  }
  if (!(p.kappa1 >= 0.0) || !(p.kappa2 >= 0.0)) {
    throw std::invalid_argument("CavityParams: couplings must be non-negative");
  }
  if (!(p.pump >= 0.0) || !std::isfinite(p.pump)) {
    throw std::invalid_argument("CavityParams: pump must be finite and non-negative");
  }
}

void require_below_threshold(const CavitySystem& s) {
  if (!(s.pump < s.epsilon_c)) {
    throw PhysicalRegimeError("pump " + std::to_string(s.pump) + " is not below threshold " +
                              std::to_string(s.epsilon_c));
  }
}

Matrix3c resolvent(const Eigen::Matrix3d& drift, double w) {
  const Matrix3c m = Complex(0.0, -w) * Matrix3c::Identity() - drift.cast<Complex>();
  return m.partialPivLu().inverse();
}

Matrix3c output_transfer(const CavitySystem& s, const Eigen::Matrix3d& drift, double w) {
  const Matrix3c b = s.noise_in.cast<Complex>();
  return b * resolvent(drift, w) * b - Matrix3c::Identity();
}

SpectralMatrix assemble(const Matrix3c& x, const Matrix3c& y) {
  SpectralMatrix out = SpectralMatrix::Zero();
  out.topLeftCorner<3, 3>() = x;
  out.bottomRightCorner<3, 3>() = y;
  return out;
}

// Solves A V + V A^T = -Q via the Kronecker form (I (x) A + A (x) I) vec V.
Eigen::Matrix3d lyapunov(const Eigen::Matrix3d& a, const Eigen::Matrix3d& q) {
  Eigen::Matrix<double, 9, 9> k = Eigen::Matrix<double, 9, 9>::Zero();
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      k.block<3, 3>(3 * i, 3 * j) = id(i, j) * a + a(i, j) * id;
    }
  }
  const Eigen::Matrix<double, 9, 1> rhs = -Eigen::Map<const Eigen::Matrix<double, 9, 1>>(q.data());
  const Eigen::Matrix<double, 9, 1> v = k.fullPivLu().solve(rhs);
  return Eigen::Map<const Eigen::Matrix3d>(v.data());
}

}  // namespace

CavityParams CavityParams::with_pump_fraction(double frac) const {
  CavityParams p = *this;
  p.pump = frac * critical_pump(*this);
  return p;
}

double critical_pump(const CavityParams& p) {
  validate(p);
  const double denom = p.kappa1 * p.kappa1 * p.gamma2 - p.kappa2 * p.kappa2 * p.gamma1;
  if (!(denom > 0.0)) {
    throw PhysicalRegimeError("critical_pump: kappa1^2 gamma2 <= kappa2^2 gamma1, no threshold");
  }
  return p.gamma0 * std::sqrt(p.gamma1 * p.gamma2 * p.gamma3) / std::sqrt(denom);
}

CavitySystem build_system(const CavityParams& p) {
  CavitySystem s;
  s.epsilon_c = critical_pump(p);
  s.pump = p.pump;
  s.frequency_unit = p.gamma1;
  const double g1 = p.kappa1 * p.pump / p.gamma0;
  const double g2 = p.kappa2 * p.pump / p.gamma0;
  s.drift_x << -p.gamma1, 0.0, g1,
               0.0, -p.gamma2, g2,
               g1, -g2, -p.gamma3;
  s.drift_y << -p.gamma1, 0.0, -g1,
               0.0, -p.gamma2, g2,
               -g1, -g2, -p.gamma3;
  s.noise_in = Eigen::Vector3d(2.0 * p.gamma1, 2.0 * p.gamma2, 2.0 * p.gamma3)
                   .cwiseSqrt()
                   .asDiagonal();
  return s;
}

SpectralMatrix output_spectrum(const CavitySystem& system, double omega) {
  require_below_threshold(system);
  const double w = omega * system.frequency_unit;
  const Matrix3c mx = output_transfer(system, system.drift_x, w);
  const Matrix3c my = output_transfer(system, system.drift_y, w);
  return assemble(mx * mx.adjoint(), my * my.adjoint());
}

SpectralMatrix intracavity_spectrum(const CavitySystem& system, double omega) {
  require_below_threshold(system);
  const double w = omega * system.frequency_unit;
  const Matrix3c b = system.noise_in.cast<Complex>();
  const Matrix3c rx = resolvent(system.drift_x, w) * b;
  const Matrix3c ry = resolvent(system.drift_y, w) * b;
  return assemble(rx * rx.adjoint(), ry * ry.adjoint());
}

Eigen::MatrixXd stationary_covariance(const CavitySystem& system) {
  require_below_threshold(system);
  const Eigen::Matrix3d q = system.noise_in * system.noise_in.transpose();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(6, 6);
  v.topLeftCorner(3, 3) = lyapunov(system.drift_x, q);
  v.bottomRightCorner(3, 3) = lyapunov(system.drift_y, q);
  return v;
}

GaussianState spectral_state(const CavitySystem& system, double omega) {
  return GaussianState(output_spectrum(system, omega).real());
}

std::vector<CriterionResult> spectral_criteria(const CavitySystem& system, double omega) {
  const GaussianState s = spectral_state(system, omega);
  std::vector<CriterionResult> out;
  out.reserve(24);
  for (const auto& [steered, steerer] : kOrderedPairs) out.push_back(reid_product(s, steered, steerer));
  for (std::size_t p = 0; p < kOrderedPairs.size(); ++p) {
    CriterionResult k = key_rate(out[p].value);
    k.steered_mode = out[p].steered_mode;
    k.steering_modes = out[p].steering_modes;
    out.push_back(std::move(k));
  }
  for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    DuanSimon ds = duan_simon(s, i, j);
    out.push_back(std::move(ds.plus));
    out.push_back(std::move(ds.minus));
  }
  for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    out.push_back(vlf_pair(s, i, j, 3 - i - j));
  }
  out.push_back(vlf_trio(s, 0, 1, 2));
  out.push_back(vlf_trio(s, 1, 0, 2));
  out.push_back(vlf_trio(s, 2, 0, 1));
  return out;
}

std::vector<PumpSweepRow> pump_sweep(const CavityParams& params, std::span<const double> eps_fracs,
                                     std::span<const double> omegas, Execution exec) {
  if (omegas.empty()) throw std::invalid_argument("pump_sweep: empty frequency grid");
  for (double f : eps_fracs) {
    if (!(f >= 0.0 && f < 1.0)) {
      throw std::invalid_argument("pump_sweep: pump fractions must lie in [0, 1)");
    }
  }
  std::vector<double> fracs(eps_fracs.begin(), eps_fracs.end());
  std::sort(fracs.begin(), fracs.end());

  std::vector<PumpSweepRow> rows(fracs.size());
  for_each_index(fracs.size(), exec, [&](std::size_t r) {
    const CavitySystem sys = build_system(params.with_pump_fraction(fracs[r]));
    PumpSweepRow row{fracs[r], {}, {}};
    row.min_pi.fill(std::numeric_limits<double>::infinity());
    for (double w : omegas) {
      const GaussianState s = spectral_state(sys, w);
      for (std::size_t p = 0; p < kOrderedPairs.size(); ++p) {
        const double pi = reid_product(s, kOrderedPairs[p].steered, kOrderedPairs[p].steerer).value;
        row.min_pi[p] = std::min(row.min_pi[p], pi);
      }
    }
    // key_rate is decreasing in the Reid product.
    for (std::size_t p = 0; p < kOrderedPairs.size(); ++p) row.max_k[p] = key_rate(row.min_pi[p]).value;
    rows[r] = row;
  });
  return rows;
}

std::vector<double> default_omega_grid() {
  constexpr std::size_t kPoints = 481;
  std::vector<double> grid(kPoints);
  for (std::size_t i = 0; i < kPoints; ++i) grid[i] = -6.0 + 12.0 * static_cast<double>(i) / (kPoints - 1);
  return grid;
}

}  // namespace cvtri
