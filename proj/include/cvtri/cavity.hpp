#pragma once

// Below-threshold intracavity version of the downconversion + sum-frequency
// model, treated as a linear Ornstein-Uhlenbeck process with vacuum inputs.
//
// With an undepleted classical pump of intracavity amplitude pump/gamma0 the
// effective couplings are g1 = kappa1 * pump / gamma0, g2 = kappa2 * pump /
// gamma0, and the fluctuation drift for the quadratures of modes (0, 1, 2),
// whose decay rates are gamma1..gamma3, is
//
//   A_X = [[-gamma1, 0, g1], [0, -gamma2, g2], [g1, -g2, -gamma3]]
//   A_Y = [[-gamma1, 0, -g1], [0, -gamma2, g2], [-g1, -g2, -gamma3]]
//
// The drift
// becomes singular exactly at the oscillation threshold returned by
// critical_pump. Output fields follow from the input-output relation
// x_out = sqrt(2 Gamma) x - x_in.

#include "cvtri/criteria.hpp"
#include "cvtri/execution.hpp"
#include "cvtri/gaussian.hpp"

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace cvtri {

struct CavityParams {
  double gamma0 = 1.0;  // pump-mode decay
  double gamma1 = 1.0;  // decay of mode 0; also the frequency unit
  double gamma2 = 3.0;  // decay of mode 1
  double gamma3 = 1.0;  // decay of mode 2
  double kappa1 = 0.01;
  double kappa2 = 0.006;
  double pump = 0.0;  // external pump amplitude

  /// Copy with the pump set to frac * critical_pump(*this).
  CavityParams with_pump_fraction(double frac) const;
};

/// Oscillation threshold gamma0 sqrt(g1 g2 g3) / sqrt(k1^2 g2 - k2^2 g1).
/// Throws PhysicalRegimeError if the denominator is not positive.
double critical_pump(const CavityParams& params);

struct CavitySystem {
  Eigen::Matrix3d drift_x;
  Eigen::Matrix3d drift_y;
  Eigen::Matrix3d noise_in;  // sqrt(2 Gamma)
  double epsilon_c;
  double pump;
  double frequency_unit;  // gamma1
};

CavitySystem build_system(const CavityParams& params);

using SpectralMatrix = Eigen::Matrix<std::complex<double>, 6, 6>;

/// Output spectral matrix at omega (in units of gamma1), X block then Y block.
/// Throws PhysicalRegimeError at or above threshold.
SpectralMatrix output_spectrum(const CavitySystem& system, double omega);

/// Spectrum of the intracavity fluctuations, (-i w - A)^-1 2 Gamma (i w - A^T)^-1.
SpectralMatrix intracavity_spectrum(const CavitySystem& system, double omega);

/// Solution of A V + V A^T + 2 Gamma = 0 for both quadrature sectors.
Eigen::MatrixXd stationary_covariance(const CavitySystem& system);

/// Symmetrised output spectrum Re S_out(omega), used as a covariance matrix.
GaussianState spectral_state(const CavitySystem& system, double omega);

struct OrderedPair {
  std::size_t steered;
  std::size_t steerer;
};

inline constexpr std::array<OrderedPair, 6> kOrderedPairs{
    {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}};

/// Every criterion at one frequency: Reid products and key rates for each
/// ordered pair (in kOrderedPairs order), then Duan-Simon +/- for the pairs
/// (0,1), (0,2), (1,2), then the optimised pairwise van Loock-Furusawa sums
/// and the trio sums.
std::vector<CriterionResult> spectral_criteria(const CavitySystem& system, double omega);

struct PumpSweepRow {
  double eps_frac;
  std::array<double, 6> min_pi;  // min over omega, kOrderedPairs order
  std::array<double, 6> max_k;   // max over omega
};

/// Extremal-over-omega steering products and key rates for each pump
/// fraction. Rows come back in ascending eps_frac order.
std::vector<PumpSweepRow> pump_sweep(const CavityParams& params, std::span<const double> eps_fracs,
                                     std::span<const double> omegas,
                                     Execution exec = Execution::Parallel);

/// Default frequency grid: 481 points on [-6, 6].
std::vector<double> default_omega_grid();

}  // namespace cvtri
