#include "cvtri/oracle.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace cvtri::oracle {

Eigen::MatrixXd matexp(const Eigen::MatrixXd& a, double t) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matexp: matrix must be square");
  if (!a.allFinite() || !std::isfinite(t)) throw std::invalid_argument("matexp: non-finite input");
  const Eigen::MatrixXd at = a * t;
  const Eigen::Index n = at.rows();
  const double norm = at.cwiseAbs().colwise().sum().maxCoeff();
  if (norm > 10.0) {
    std::clog << "cvtri::oracle::matexp: ||A t||_1 = " << norm
              << " exceeds the calibrated range (10)\n";
  }

  // Scale so the norm is at most 1/2, then a degree-20 Taylor series is
  // accurate to well below double precision.
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd scaled = at / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

std::pair<double, double> CounterRng::normal_pair(std::uint64_t pair_index) const {
  const double u1 = uniform(2 * pair_index);
  const double u2 = uniform(2 * pair_index + 1);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

namespace {

struct BatchSums {
  Eigen::MatrixXd first;   // sum of y y^T
  Eigen::MatrixXd second;  // sum of (y y^T) .^ 2
};

// Normals are drawn pairwise from a per-sample counter range, so sample s
// always sees the same variates regardless of how batches are scheduled.
BatchSums run_batch(const Eigen::MatrixXd& m, const CounterRng& rng, std::size_t begin,
                    std::size_t end) {
  const Eigen::Index d = m.cols();
  const std::size_t pairs_per_sample = (static_cast<std::size_t>(d) + 1) / 2;
  BatchSums sums{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d)};
  Eigen::VectorXd x(d);
  for (std::size_t s = begin; s < end; ++s) {
    for (std::size_t p = 0; p < pairs_per_sample; ++p) {
      const auto [g1, g2] = rng.normal_pair(s * pairs_per_sample + p);
      const auto i = static_cast<Eigen::Index>(2 * p);
      x(i) = g1;
      if (i + 1 < d) x(i + 1) = g2;
    }
    const Eigen::VectorXd y = m * x;
    const Eigen::MatrixXd outer = y * y.transpose();
    sums.first += outer;
    sums.second += outer.cwiseProduct(outer);
  }
  return sums;
}

McCovariance finish(const std::vector<BatchSums>& batches, Eigen::Index d, std::size_t n) {
  Eigen::MatrixXd first = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd second = Eigen::MatrixXd::Zero(d, d);
  for (const auto& b : batches) {
    first += b.first;
    second += b.second;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  McCovariance out;
  out.cov = first * inv_n;
  const Eigen::MatrixXd spread = (second * inv_n - out.cov.cwiseProduct(out.cov)).cwiseMax(0.0);
  out.std_error = (spread * inv_n).cwiseSqrt();
  out.n_samples = n;
  return out;
}

void check_samples(std::size_t n_samples) {
  if (n_samples < kMinMcSamples) {
    throw std::invalid_argument("mc_covariance: need at least " + std::to_string(kMinMcSamples) +
                                " samples");
  }
}

}  // namespace

McCovariance mc_covariance(const QuadratureMap& map, std::size_t n_samples, RngSeed seed) {
  check_samples(n_samples);
  const CounterRng rng(seed);
  const std::size_t n_batches = (n_samples + kMcBatch - 1) / kMcBatch;
  std::vector<BatchSums> batches(n_batches);
  const auto nb = static_cast<std::int64_t>(n_batches);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kMcBatch;
    const std::size_t end = std::min(n_samples, begin + kMcBatch);
    batches[static_cast<std::size_t>(b)] = run_batch(map.mat(), rng, begin, end);
  }
  return finish(batches, map.mat().cols(), n_samples);
}

McCovariance mc_covariance_serial(const QuadratureMap& map, std::size_t n_samples,
                                  RngSeed seed) {
  check_samples(n_samples);
  const CounterRng rng(seed);
  std::vector<BatchSums> batches;
  for (std::size_t begin = 0; begin < n_samples; begin += kMcBatch) {
    batches.push_back(run_batch(map.mat(), rng, begin, std::min(n_samples, begin + kMcBatch)));
  }
  return finish(batches, map.mat().cols(), n_samples);
}

std::vector<Bracket> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                   std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("bracket_roots: steps must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("bracket_roots: need lo < hi");
  std::vector<Bracket> out;
  const double h = (hi - lo) / static_cast<double>(steps);
  double x_prev = lo;
  double f_prev = f(lo);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double x = i == steps ? hi : lo + h * static_cast<double>(i);
    const double fx = f(x);
    if ((f_prev < 0.0 && fx >= 0.0) || (f_prev > 0.0 && fx <= 0.0)) out.push_back({x_prev, x});
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

double bisect(const std::function<double(double)>& f, Bracket bracket, double tol) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  const bool lo_negative = f(lo) < 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace cvtri::oracle
