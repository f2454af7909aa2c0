#include "doctest.h"

#include "cvtri/asym_tw.hpp"
#include "cvtri/criteria.hpp"
#include "cvtri/oracle.hpp"
#include "test_support.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace cvtri;
using cvtri::test::near;

TEST_CASE("matexp basics") {
  CHECK(oracle::matexp(Eigen::MatrixXd::Zero(3, 3), 2.0) == Eigen::MatrixXd::Identity(3, 3));

  Eigen::MatrixXd nil(2, 2);
  nil << 0, 1, 0, 0;
  CHECK((oracle::matexp(nil, 1.0) - (Eigen::MatrixXd::Identity(2, 2) + nil)).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::MatrixXd e = oracle::matexp(test::tw_generator_x(1.0, 0.0), 1.0);
  Eigen::Matrix3d expected;
  expected << std::cosh(1.0), 0, std::sinh(1.0),
              0, 1, 0,
              std::sinh(1.0), 0, std::cosh(1.0);
  CHECK((e - expected).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(oracle::matexp(Eigen::MatrixXd::Zero(2, 3), 1.0), std::invalid_argument);
}

TEST_CASE("matexp agrees with Eigen's Pade implementation") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::MatrixXd a(4, 4);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = g(rng);
    a *= 2.0 / a.cwiseAbs().colwise().sum().maxCoeff() * (1 + trial % 5);  // ||A||_1 in [2, 10]
    const Eigen::MatrixXd ours = oracle::matexp(a, 1.0);
    const Eigen::MatrixXd ref = a.exp();
    CHECK((ours - ref).cwiseAbs().maxCoeff() <= 1e-12 * ref.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("matexp semigroup property on the model generators") {
  for (double ratio : {0.0, 0.3, 0.6, 0.9}) {
    for (const Eigen::MatrixXd& a : {Eigen::MatrixXd(test::tw_generator_x(1.0, ratio)),
                                     Eigen::MatrixXd(test::tw_generator_y(1.0, ratio))}) {
      for (auto [t, s] : {std::pair{0.3, 0.9}, std::pair{1.1, 2.0}, std::pair{0.0, 1.5}}) {
        const Eigen::MatrixXd lhs = oracle::matexp(a, t + s);
        const Eigen::MatrixXd rhs = oracle::matexp(a, t) * oracle::matexp(a, s);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, lhs.cwiseAbs().maxCoeff()));
      }
    }
  }
}

TEST_CASE("CounterRng is counter-addressable") {
  const oracle::CounterRng a({42}), b({42}), c({43});
  CHECK(a.bits(17) == b.bits(17));
  CHECK(a.bits(17) != c.bits(17));
  CHECK(a.bits(17) != a.bits(18));
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const double u = a.uniform(k);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("mc_covariance") {
  SUBCASE("identity map recovers the vacuum") {
    const auto mc = oracle::mc_covariance(QuadratureMap::identity(3), 1'000'000, {11});
    const Eigen::MatrixXd dev = (mc.cov - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs();
    CHECK((dev.array() <= 5.0 * mc.std_error.array()).all());
    CHECK((mc.cov - mc.cov.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("standard error scales as n^-1/2") {
    const auto small = oracle::mc_covariance(QuadratureMap::identity(1), 10'000, {5});
    const auto large = oracle::mc_covariance(QuadratureMap::identity(1), 1'000'000, {5});
    const double ratio = small.std_error(0, 0) / large.std_error(0, 0);
    CHECK(ratio > 8.0);
    CHECK(ratio < 12.0);
  }
  SUBCASE("travelling-wave map at zt = 1") {
    const auto map = tw_transform(AsymParams::with_ratio(0.6), 1.0);
    const auto mc = oracle::mc_covariance(map, 1'000'000, {2024});
    const Eigen::MatrixXd exact = tw_state(AsymParams::with_ratio(0.6), 1.0).cov();
    const Eigen::MatrixXd dev = (mc.cov - exact).cwiseAbs();
    CHECK((dev.array() <= 5.0 * mc.std_error.array() + 1e-12).all());

    // combo_variance against the sampled variance of the same combination.
    Eigen::VectorXd c = Eigen::VectorXd::Zero(6);
    c << 1, 0, -1, 0, 0, 0;
    const double sampled = c.dot(mc.cov * c);
    const double se = std::sqrt(2.0 / 1e6) * sampled;  // Gaussian variance estimator
    CHECK(std::abs(combo_variance(GaussianState(exact), c) - sampled) < 5.0 * se);
  }
  SUBCASE("bit-identical across seeds, schedules and reruns") {
    const auto map = tw_transform(AsymParams::with_ratio(0.6), 0.5);
    const auto a = oracle::mc_covariance(map, 50'000, {9});
    const auto b = oracle::mc_covariance(map, 50'000, {9});
    const auto s = oracle::mc_covariance_serial(map, 50'000, {9});
    CHECK(a.cov == b.cov);
    CHECK(a.cov == s.cov);
    CHECK(a.std_error == s.std_error);
    CHECK(oracle::mc_covariance(map, 50'000, {10}).cov != a.cov);
  }
  CHECK_THROWS_AS(oracle::mc_covariance(QuadratureMap::identity(1), 999, {1}), std::invalid_argument);
}

TEST_CASE("bracket_roots and bisect") {
  const auto linear = [](double x) { return x - 0.5; };
  const auto br = oracle::bracket_roots(linear, 0.0, 1.0, 100);
  REQUIRE(br.size() == 1);
  CHECK(br[0].lo <= 0.5);
  CHECK(br[0].hi >= 0.5);
  CHECK(near(oracle::bisect(linear, br[0], 1e-9), 0.5, 1e-9));

  CHECK(oracle::bracket_roots([](double) { return 2.0; }, 0.0, 1.0, 50).empty());
  CHECK_THROWS_AS(oracle::bracket_roots(linear, 0.0, 1.0, 1), std::invalid_argument);

  const AsymParams lit = AsymParams::with_ratio(0.6, CoefficientMode::PaperLiteral);
  const auto rate = [&](double zt) { return key_rate(reid_product(tw_state(lit, zt), 0, 2).value).value; };
  const auto window = oracle::bracket_roots(rate, 0.0, 2.0, 2000);
  REQUIRE(window.size() == 2);
  CHECK(rate(window[0].lo) < 0.0);
  CHECK(rate(window[1].hi) < 0.0);
}
