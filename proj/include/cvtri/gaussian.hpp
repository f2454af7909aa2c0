#pragma once

// Zero-mean Gaussian states and linear quadrature maps.
//
// Conventions: X = a + a^dag, Y = -i(a - a^dag), so the vacuum has unit
// variance in every quadrature and [X_i, Y_j] = 2i delta_ij. Quadratures of
// an N-mode system are laid out as (X_0 .. X_{N-1}, Y_0 .. Y_{N-1}). Modes
// are indexed from 0 throughout the API.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace cvtri {

enum class Quadrature { X, Y };

/// One quadrature of one mode.
struct Quad {
  Quadrature kind;
  std::size_t mode;

  static constexpr Quad x(std::size_t m) { return {Quadrature::X, m}; }
  static constexpr Quad y(std::size_t m) { return {Quadrature::Y, m}; }

  std::size_t index(std::size_t n_modes) const {
    return kind == Quadrature::X ? mode : n_modes + mode;
  }
};

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kUncertaintyTol = 1e-9;
inline constexpr double kSymplecticTol = 1e-10;

/// Symplectic form for the X-block/Y-block layout: [[0, I], [-I, 0]].
Eigen::MatrixXd symplectic_form(std::size_t n_modes);

class GaussianState {
 public:
  /// Validates symmetry and the uncertainty relation cov + i*Omega >= 0.
  /// The eigenvalue slack is kUncertaintyTol scaled by max(1, max|cov|).
  explicit GaussianState(Eigen::MatrixXd cov);

  /// Checks symmetry only. For covariances produced by deliberately
  /// non-symplectic compatibility maps, which may violate the uncertainty
  /// relation.
  static GaussianState without_uncertainty_check(Eigen::MatrixXd cov);

  std::size_t n_modes() const { return n_modes_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  double variance(Quad q) const;
  double covariance(Quad a, Quad b) const;

  /// Smallest eigenvalue of cov + i*Omega.
  double min_uncertainty_eigenvalue() const;

 private:
  GaussianState(Eigen::MatrixXd cov, bool check_uncertainty);

  std::size_t n_modes_;
  Eigen::MatrixXd cov_;
};

/// Linear map acting on the quadrature vector (X..., Y...).
class QuadratureMap {
 public:
  explicit QuadratureMap(Eigen::MatrixXd mat);

  static QuadratureMap identity(std::size_t n_modes);
  /// Block-diagonal map with independent X and Y sectors.
  static QuadratureMap from_blocks(const Eigen::MatrixXd& x_block,
                                   const Eigen::MatrixXd& y_block);

  std::size_t n_modes() const { return n_modes_; }
  const Eigen::MatrixXd& mat() const { return mat_; }
  Eigen::MatrixXd x_block() const;
  Eigen::MatrixXd y_block() const;

  /// Apply `first`, then `*this`.
  QuadratureMap after(const QuadratureMap& first) const;

 private:
  std::size_t n_modes_;
  Eigen::MatrixXd mat_;
};

struct ModeSqueezing {
  Quadrature squeezed;  // the quadrature with variance e^{-r}
  double r;
};

using SqueezingSpec = std::vector<ModeSqueezing>;

GaussianState vacuum_state(std::size_t n_modes);

/// Product of minimum-uncertainty squeezed modes.
GaussianState squeezed_inputs(const SqueezingSpec& spec);

/// Two-mode beamsplitter with power reflectivity R:
///   a' = sqrt(1-R) a + sqrt(R) b,   b' = -sqrt(R) a + sqrt(1-R) b.
/// R = 0 is the identity. Acts identically on the X and Y sectors.
QuadratureMap beamsplitter_map(std::size_t n_modes, std::size_t mode_a,
                               std::size_t mode_b, double reflectivity);

/// pi phase shift on one mode (a -> -a).
QuadratureMap phase_flip_map(std::size_t n_modes, std::size_t mode);

/// Covariance congruence V -> M V M^T.
GaussianState apply_map(const GaussianState& state, const QuadratureMap& map);

/// True iff max|M Omega M^T - Omega| <= tol.
bool is_symplectic(const QuadratureMap& map, double tol = kSymplecticTol);
double symplectic_defect(const QuadratureMap& map);

/// Variance of c^T x, i.e. c^T cov c.
double combo_variance(const GaussianState& state, const Eigen::VectorXd& coefficients);

}  // namespace cvtri
