#include "cvtri/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cvtri {

namespace {

std::size_t modes_from_dim(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols || rows == 0 || rows % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": expected a nonempty 2N x 2N matrix, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
  return static_cast<std::size_t>(rows / 2);
}

void check_mode(std::size_t n_modes, std::size_t mode) {
  if (mode >= n_modes) {
    throw std::invalid_argument("mode index " + std::to_string(mode) + " out of range for " +
                                std::to_string(n_modes) + " modes");
  }
}

}  // namespace

Eigen::MatrixXd symplectic_form(std::size_t n_modes) {
  const auto n = static_cast<Eigen::Index>(n_modes);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n).setIdentity();
  omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return omega;
}

GaussianState::GaussianState(Eigen::MatrixXd cov) : GaussianState(std::move(cov), true) {}

GaussianState GaussianState::without_uncertainty_check(Eigen::MatrixXd cov) {
  return GaussianState(std::move(cov), false);
}

GaussianState::GaussianState(Eigen::MatrixXd cov, bool check_uncertainty)
    : n_modes_(modes_from_dim(cov.rows(), cov.cols(), "GaussianState")), cov_(std::move(cov)) {
  if (!cov_.allFinite()) throw std::invalid_argument("GaussianState: non-finite covariance");
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    throw std::invalid_argument("GaussianState: covariance is not symmetric");
  }
  cov_ = 0.5 * (cov_ + cov_.transpose()).eval();
  if (check_uncertainty && min_uncertainty_eigenvalue() < -kUncertaintyTol * scale) {
    throw std::invalid_argument("GaussianState: covariance violates the uncertainty relation");
  }
}

double GaussianState::variance(Quad q) const {
  check_mode(n_modes_, q.mode);
  const auto i = static_cast<Eigen::Index>(q.index(n_modes_));
  return cov_(i, i);
}

double GaussianState::covariance(Quad a, Quad b) const {
  check_mode(n_modes_, a.mode);
  check_mode(n_modes_, b.mode);
  return cov_(static_cast<Eigen::Index>(a.index(n_modes_)),
              static_cast<Eigen::Index>(b.index(n_modes_)));
}

double GaussianState::min_uncertainty_eigenvalue() const {
  const Eigen::MatrixXcd h = cov_.cast<std::complex<double>>() +
                             std::complex<double>(0.0, 1.0) * symplectic_form(n_modes_);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

QuadratureMap::QuadratureMap(Eigen::MatrixXd mat)
    : n_modes_(modes_from_dim(mat.rows(), mat.cols(), "QuadratureMap")), mat_(std::move(mat)) {}

QuadratureMap QuadratureMap::identity(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("QuadratureMap: n_modes must be >= 1");
  const auto d = static_cast<Eigen::Index>(2 * n_modes);
  return QuadratureMap(Eigen::MatrixXd::Identity(d, d));
}

QuadratureMap QuadratureMap::from_blocks(const Eigen::MatrixXd& x_block,
                                         const Eigen::MatrixXd& y_block) {
  const Eigen::Index n = x_block.rows();
  if (n == 0 || x_block.cols() != n || y_block.rows() != n || y_block.cols() != n) {
    throw std::invalid_argument("QuadratureMap::from_blocks: blocks must be equal-size square");
  }
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  mat.topLeftCorner(n, n) = x_block;
  mat.bottomRightCorner(n, n) = y_block;
  return QuadratureMap(std::move(mat));
}

Eigen::MatrixXd QuadratureMap::x_block() const {
  const auto n = static_cast<Eigen::Index>(n_modes_);
  return mat_.topLeftCorner(n, n);
}

Eigen::MatrixXd QuadratureMap::y_block() const {
  const auto n = static_cast<Eigen::Index>(n_modes_);
  return mat_.bottomRightCorner(n, n);
}

QuadratureMap QuadratureMap::after(const QuadratureMap& first) const {
  if (first.n_modes_ != n_modes_) throw std::invalid_argument("QuadratureMap::after: size mismatch");
  return QuadratureMap(mat_ * first.mat_);
}

GaussianState vacuum_state(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("vacuum_state: n_modes must be >= 1");
  const auto d = static_cast<Eigen::Index>(2 * n_modes);
  return GaussianState(Eigen::MatrixXd::Identity(d, d));
}

GaussianState squeezed_inputs(const SqueezingSpec& spec) {
  if (spec.empty()) throw std::invalid_argument("squeezed_inputs: empty spec");
  const auto n = static_cast<Eigen::Index>(spec.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const auto& s = spec[static_cast<std::size_t>(m)];
    if (!(s.r >= 0.0) || !std::isfinite(s.r)) {
      throw std::invalid_argument("squeezed_inputs: squeezing parameter must be finite and >= 0");
    }
    const double lo = std::exp(-s.r);
    const double hi = std::exp(s.r);
    cov(m, m) = s.squeezed == Quadrature::X ? lo : hi;
    cov(n + m, n + m) = s.squeezed == Quadrature::X ? hi : lo;
  }
  return GaussianState(std::move(cov));
}

QuadratureMap beamsplitter_map(std::size_t n_modes, std::size_t mode_a, std::size_t mode_b,
                               double reflectivity) {
  check_mode(n_modes, mode_a);
  check_mode(n_modes, mode_b);
  if (mode_a == mode_b) throw std::invalid_argument("beamsplitter_map: modes must differ");
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
    throw std::invalid_argument("beamsplitter_map: reflectivity must lie in [0, 1]");
  }
  const auto n = static_cast<Eigen::Index>(n_modes);
  const auto a = static_cast<Eigen::Index>(mode_a);
  const auto b = static_cast<Eigen::Index>(mode_b);
  const double t = std::sqrt(1.0 - reflectivity);
  const double s = std::sqrt(reflectivity);
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(n, n);
  u(a, a) = t;
  u(a, b) = s;
  u(b, a) = -s;
  u(b, b) = t;
  return QuadratureMap::from_blocks(u, u);
}

QuadratureMap phase_flip_map(std::size_t n_modes, std::size_t mode) {
  check_mode(n_modes, mode);
  const auto n = static_cast<Eigen::Index>(n_modes);
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(n, n);
  u(static_cast<Eigen::Index>(mode), static_cast<Eigen::Index>(mode)) = -1.0;
  return QuadratureMap::from_blocks(u, u);
}

GaussianState apply_map(const GaussianState& state, const QuadratureMap& map) {
  if (state.n_modes() != map.n_modes()) {
    throw std::invalid_argument("apply_map: state has " + std::to_string(state.n_modes()) +
                                " modes, map has " + std::to_string(map.n_modes()));
  }
  return GaussianState(map.mat() * state.cov() * map.mat().transpose());
}

double symplectic_defect(const QuadratureMap& map) {
  const Eigen::MatrixXd omega = symplectic_form(map.n_modes());
  return (map.mat() * omega * map.mat().transpose() - omega).cwiseAbs().maxCoeff();
}

bool is_symplectic(const QuadratureMap& map, double tol) { return symplectic_defect(map) <= tol; }

double combo_variance(const GaussianState& state, const Eigen::VectorXd& coefficients) {
  if (coefficients.size() != state.cov().rows()) {
    throw std::invalid_argument("combo_variance: coefficient vector has length " +
                                std::to_string(coefficients.size()) + ", expected " +
                                std::to_string(state.cov().rows()));
  }
  return coefficients.dot(state.cov() * coefficients);
}

}  // namespace cvtri
