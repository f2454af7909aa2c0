#pragma once

// Independent numerical engines used to cross-check the analytic models:
// a scaling-and-squaring matrix exponential, a seeded Monte-Carlo covariance
// estimator, and grid-scan root bracketing with bisection.

#include "cvtri/gaussian.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace cvtri::oracle {

/// exp(A t). Accurate to ~1e-12 relative for ||A t||_1 <= 10; larger
/// arguments still work but print a range warning to std::clog.
Eigen::MatrixXd matexp(const Eigen::MatrixXd& a, double t);

struct RngSeed {
  std::uint64_t value;
};

/// Counter-based generator: draw k of stream `seed` is splitmix64's output
/// function applied to seed + (k + 1) * 0x9E3779B97F4A7C15. Any draw can be
/// computed independently, so parallel batches need no shared state.
class CounterRng {
 public:
  explicit CounterRng(RngSeed seed) : seed_(seed.value) {}

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const;
  /// Two independent standard normals via Box-Muller on draws 2p and 2p+1.
  std::pair<double, double> normal_pair(std::uint64_t pair_index) const;

 private:
  std::uint64_t seed_;
};

struct McCovariance {
  Eigen::MatrixXd cov;
  Eigen::MatrixXd std_error;
  std::size_t n_samples;
};

inline constexpr std::size_t kMinMcSamples = 1000;
inline constexpr std::size_t kMcBatch = 4096;

/// Sample covariance of M x with x standard normal (vacuum inputs), using the
/// known zero mean. Samples are processed in fixed batches of kMcBatch whose
/// partial sums are combined in batch order, so the result is bit-identical
/// for any thread count.
McCovariance mc_covariance(const QuadratureMap& map, std::size_t n_samples, RngSeed seed);

/// Single-threaded reference for mc_covariance.
McCovariance mc_covariance_serial(const QuadratureMap& map, std::size_t n_samples, RngSeed seed);

struct Bracket {
  double lo;
  double hi;
};

/// Sign-change intervals of f sampled at steps+1 evenly spaced points of
/// [lo, hi], in ascending order. A sample that is exactly zero closes the
/// bracket on its left.
std::vector<Bracket> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                   std::size_t steps);

/// Bisection on a sign-change bracket until the width is below tol.
double bisect(const std::function<double(double)>& f, Bracket bracket, double tol);

}  // namespace cvtri::oracle
