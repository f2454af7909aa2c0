#pragma once

// Travelling-wave downconversion + sum-frequency model.
//
// Mode 0 and mode 2 are produced by downconversion (coupling kappa1); mode 1
// is produced by sum-frequency mixing of mode 2 with the pump (kappa2). The
// Heisenberg equations are linear and decouple into X and Y sectors:
//
//   dX0 = k1 X2,   dX1 = k2 X2,   dX2 = k1 X0 - k2 X1
//   dY0 = -k1 Y2,  dY1 = k2 Y2,   dY2 = -k1 Y0 - k2 Y1
//
// and are solved in closed form with zeta = sqrt(k1^2 - k2^2). Everything is
// expressed in the scaled interaction length zt = zeta * t.
//
// Two coefficient modes exist. Canonical is the exact solution above.
// PaperLiteral reproduces a widely quoted printed form of the solution in
// which the sinh terms carry 1/zeta^2 instead of 1/zeta and the X1/Y1 rows
// reuse gamma in place of epsilon. It is not symplectic; it is kept only to
// reproduce the key-rate windows that were derived from it. PaperLiteral
// coefficients are evaluated with kappa1 normalised to 1.

#include "cvtri/gaussian.hpp"

#include <optional>

namespace cvtri {

enum class CoefficientMode { Canonical, PaperLiteral };

class AsymParams {
 public:
  /// Requires kappa1 > kappa2 >= 0.
  AsymParams(double kappa1, double kappa2, CoefficientMode mode = CoefficientMode::Canonical);

  /// kappa1 = 1, kappa2 = ratio.
  static AsymParams with_ratio(double kappa_ratio,
                               CoefficientMode mode = CoefficientMode::Canonical);

  double kappa1() const { return kappa1_; }
  double kappa2() const { return kappa2_; }
  double zeta() const { return zeta_; }
  CoefficientMode mode() const { return mode_; }

 private:
  double kappa1_;
  double kappa2_;
  double zeta_;
  CoefficientMode mode_;
};

struct CoefficientSet {
  double alpha;
  double beta;
  double gamma;
  double delta;
  double epsilon;
  double eta;
};

CoefficientSet coefficient_set(const AsymParams& params, double zt);

/// 6x6 map from the input quadratures at zt = 0 to those at zt.
QuadratureMap tw_transform(const AsymParams& params, double zt);

/// Output state for vacuum inputs: cov = M M^T.
GaussianState tw_state(const AsymParams& params, double zt);

/// Second moments in closed form, tabulated from the coefficient set. In
/// canonical mode the mode-1 entries use epsilon; in paper-literal mode they
/// follow the printed table (gamma). Either way they must equal tw_state.
struct MomentTable {
  double x00, x11, x22;
  double x01, x02, x12;
  double y01, y02, y12;
};

MomentTable moment_table(const CoefficientSet& c, CoefficientMode mode);

/// Steering products written directly in the coefficients as commonly
/// printed. pi_20 carries (alpha^2 + ...) where the covariance algebra gives
/// (gamma^2 + ...), so it disagrees with reid_product on tw_state.
struct LiteralSteeringFormulas {
  double pi_02;
  double pi_20;
};

LiteralSteeringFormulas literal_steering_formulas(const CoefficientSet& c);

struct SteeringPair {
  double pi_02;  // mode 0 steered by mode 2
  double pi_20;  // mode 2 steered by mode 0
};

SteeringPair tw_steering(const AsymParams& params, double zt);

struct KeyWindow {
  double lo;
  double hi;
  /// False when the key rate is still positive at the end of the scan range.
  bool closed_high;
};

inline constexpr double kWindowScanStep = 1e-3;
inline constexpr double kWindowRootTol = 1e-6;

/// Widest contiguous zt interval in [0, zt_max] with a positive key rate for
/// `steered` inferred from `steerer`. Roots of K(zt) are bracketed on a
/// kWindowScanStep grid and refined by bisection to kWindowRootTol.
std::optional<KeyWindow> key_window(const AsymParams& params, std::size_t steered,
                                    std::size_t steerer, double zt_max = 4.0);

}  // namespace cvtri
