#include "doctest.h"

#include "cvtri/asym_tw.hpp"
#include "cvtri/criteria.hpp"
#include "cvtri/oracle.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace cvtri;
using cvtri::test::near;

namespace {

const AsymParams kCanonical = AsymParams::with_ratio(0.6);
const AsymParams kLiteral = AsymParams::with_ratio(0.6, CoefficientMode::PaperLiteral);

QuadratureMap matexp_map(double ratio, double zt) {
  const double t = zt / std::sqrt(1.0 - ratio * ratio);
  return QuadratureMap::from_blocks(oracle::matexp(test::tw_generator_x(1.0, ratio), t),
                                    oracle::matexp(test::tw_generator_y(1.0, ratio), t));
}

}  // namespace

TEST_CASE("AsymParams validation") {
  CHECK(near(AsymParams(1.0, 0.6).zeta(), 0.8, 1e-15));
  CHECK_THROWS_AS(AsymParams(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams(0.5, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(AsymParams(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("coefficient_set") {
  for (const auto& p : {kCanonical, kLiteral}) {
    const auto c = coefficient_set(p, 0.0);
    CHECK(c.alpha == 1.0);
    CHECK(c.beta == 0.0);
    CHECK(c.gamma == 0.0);
    CHECK(c.delta == 1.0);
    CHECK(c.epsilon == 0.0);
    CHECK(c.eta == 1.0);
  }

  // Goldens from scipy.linalg.expm of the equations of motion.
  const auto c = coefficient_set(kCanonical, 1.0);
  CHECK(near(c.alpha, 1.8485634918988185, 1e-13));
  CHECK(near(c.beta, 0.5091380951392909, 1e-13));
  CHECK(near(c.gamma, 1.4690014920547516, 1e-13));
  CHECK(near(c.delta, 0.6945171429164254, 1e-13));
  CHECK(near(c.epsilon, 0.8814008952328509, 1e-13));
  CHECK(near(c.eta, 1.5430806348152437, 1e-13));

  const auto sq = coefficient_set(AsymParams(2.0, 0.0), 0.7);
  CHECK(near(sq.alpha, std::cosh(0.7), 1e-15));
  CHECK(sq.beta == 0.0);
  CHECK(near(sq.gamma, std::sinh(0.7), 1e-15));
  CHECK(near(sq.delta, 1.0, 1e-15));
  CHECK(sq.epsilon == 0.0);
  CHECK(near(sq.eta, std::cosh(0.7), 1e-15));

  // Only kappa2/kappa1 matters in canonical mode.
  const auto scaled = coefficient_set(AsymParams(3.0, 1.8), 1.0);
  CHECK(near(scaled.gamma, c.gamma, 1e-14));

  CHECK_THROWS_AS(coefficient_set(kCanonical, -0.1), std::invalid_argument);
}

TEST_CASE("tw_transform") {
  CHECK(tw_transform(kCanonical, 0.0).mat() == Eigen::MatrixXd::Identity(6, 6));
  for (double zt : {0.3, 1.0, 2.0}) {
    const auto m = tw_transform(kCanonical, zt);
    CHECK(is_symplectic(m, 1e-10));
    CHECK((m.mat() - matexp_map(0.6, zt).mat()).cwiseAbs().maxCoeff() < 1e-10);
  }
  const auto lit = coefficient_set(kLiteral, 0.248);
  CHECK(near(lit.alpha * lit.alpha - lit.beta * lit.beta - lit.gamma * lit.gamma, 0.9448, 5e-4));
  CHECK_FALSE(is_symplectic(tw_transform(kLiteral, 0.248), 1e-10));
}

TEST_CASE("tw_state") {
  CHECK(tw_state(kCanonical, 0.0).cov() == Eigen::MatrixXd::Identity(6, 6));

  const auto s = tw_state(kCanonical, 1.0);
  const auto c = coefficient_set(kCanonical, 1.0);
  CHECK(near(s.variance(Quad::x(0)), c.alpha * c.alpha + c.beta * c.beta + c.gamma * c.gamma, 1e-13));
  CHECK(near(s.covariance(Quad::x(0), Quad::x(2)), 5.431085055514612, 1e-12));
  CHECK(near(s.cov().determinant(), 1.0, 1e-9));
  CHECK(s.min_uncertainty_eigenvalue() > -1e-9);
  CHECK(tw_state(kLiteral, 0.248).min_uncertainty_eigenvalue() < -0.05);

  for (const auto& p : {kCanonical, kLiteral}) {
    for (double zt : {0.2, 0.9, 2.4}) {
      const auto st = tw_state(p, zt);
      const auto t = moment_table(coefficient_set(p, zt), p.mode());
      const double tol = 1e-12 * st.cov().cwiseAbs().maxCoeff();
      CHECK(near(st.variance(Quad::x(0)), t.x00, tol));
      CHECK(near(st.variance(Quad::x(1)), t.x11, tol));
      CHECK(near(st.variance(Quad::x(2)), t.x22, tol));
      CHECK(near(st.variance(Quad::y(1)), t.x11, tol));
      CHECK(near(st.covariance(Quad::x(0), Quad::x(1)), t.x01, tol));
      CHECK(near(st.covariance(Quad::x(0), Quad::x(2)), t.x02, tol));
      CHECK(near(st.covariance(Quad::x(1), Quad::x(2)), t.x12, tol));
      CHECK(near(st.covariance(Quad::y(0), Quad::y(1)), t.y01, tol));
      CHECK(near(st.covariance(Quad::y(0), Quad::y(2)), t.y02, tol));
      CHECK(near(st.covariance(Quad::y(1), Quad::y(2)), t.y12, tol));
    }
  }
}

TEST_CASE("printed steering formulas") {
  const auto c = coefficient_set(kLiteral, 0.8);
  const auto f = literal_steering_formulas(c);
  const auto s = tw_state(kLiteral, 0.8);
  CHECK(near(f.pi_02, reid_product(s, 0, 2).value, 1e-12));
  // The pi_20 expression does not follow from the covariances.
  CHECK_FALSE(near(f.pi_20, reid_product(s, 2, 0).value, 1e-3));
}

TEST_CASE("tw_steering") {
  const auto zero = tw_steering(kCanonical, 0.0);
  CHECK(zero.pi_02 == 1.0);
  CHECK(zero.pi_20 == 1.0);
  CHECK(near(tw_steering(kCanonical, 1.0).pi_02, 0.0816, 5e-5));

  // The exact solution lets mode 0 steer mode 1 weakly; no other pair
  // involving mode 1 steers. Goldens from scipy.linalg.expm.
  CHECK(near(reid_product(tw_state(kCanonical, 0.5), 1, 0).value, 0.969728, 1e-6));
  CHECK(near(reid_product(tw_state(kCanonical, 1.0), 1, 0).value, 0.830176, 1e-6));
  CHECK(near(reid_product(tw_state(kCanonical, 3.0), 1, 0).value, 0.469525, 1e-6));
  for (int i = 1; i <= 300; ++i) {
    const auto s = tw_state(kCanonical, 0.01 * i);
    CHECK(reid_product(s, 1, 0).violated);
    CHECK(reid_product(s, 0, 1).value >= 1.0 - 1e-12);
    CHECK(reid_product(s, 1, 2).value >= 1.0 - 1e-12);
    CHECK(reid_product(s, 2, 1).value >= 1.0 - 1e-12);
  }
  // The printed coefficients hide that steering.
  for (int i = 0; i <= 300; ++i) {
    const auto s = tw_state(kLiteral, 0.01 * i);
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 2}, std::pair{2, 1}}) {
      CHECK(reid_product(s, static_cast<std::size_t>(a), static_cast<std::size_t>(b)).value >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("key_window") {
  SUBCASE("printed coefficients reproduce the quoted windows") {
    const auto alice_steers_clare = key_window(kLiteral, 2, 0);
    REQUIRE(alice_steers_clare);
    CHECK(near(alice_steers_clare->lo, 0.248, 0.02));
    CHECK(near(alice_steers_clare->hi, 1.216, 0.02));
    CHECK(alice_steers_clare->closed_high);

    const auto clare_steers_alice = key_window(kLiteral, 0, 2);
    REQUIRE(clare_steers_alice);
    CHECK(near(clare_steers_alice->lo, 0.240, 0.02));
    CHECK(near(clare_steers_alice->hi, 1.216, 0.02));
  }
  SUBCASE("bisection endpoints agree with a Brent solve") {
    // scipy.optimize.brentq on the same key-rate function, xtol 1e-13.
    const auto w = key_window(kLiteral, 2, 0);
    CHECK(near(w->lo, 0.246703345749771, 2e-6));
    CHECK(near(w->hi, 1.2160540071820145, 2e-6));
    const auto v = key_window(kLiteral, 0, 2);
    CHECK(near(v->lo, 0.24065971410229445, 2e-6));
    CHECK(near(v->hi, 1.2000390097197648, 2e-6));
  }
  SUBCASE("canonical windows open later and stay open through the scan range") {
    const auto lit = key_window(kLiteral, 2, 0);
    for (auto [steered, steerer, lo] : {std::tuple{std::size_t{2}, std::size_t{0}, 0.33371711221315375},
                                        std::tuple{std::size_t{0}, std::size_t{2}, 0.3362857679492661}}) {
      const auto w = key_window(kCanonical, steered, steerer);
      REQUIRE(w);
      CHECK(near(w->lo, lo, 2e-6));
      CHECK(w->hi == 4.0);
      CHECK_FALSE(w->closed_high);
      CHECK(w->hi > lit->hi);
    }
  }
  SUBCASE("no window") {
    CHECK_FALSE(key_window(AsymParams::with_ratio(0.6), 2, 0, 0.2).has_value());
  }
  CHECK_THROWS_AS(key_window(kCanonical, 0, 1), std::invalid_argument);
}

TEST_CASE("invariants on the canonical model") {
  for (int i = 0; i < 20; ++i) {
    const double zt = 4.0 * i / 19.0;
    const auto m = tw_transform(kCanonical, zt);
    CHECK((m.x_block() * m.y_block().transpose() - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);

    const auto ref = matexp_map(0.6, zt);
    const Eigen::MatrixXd ref_cov = ref.mat() * ref.mat().transpose();
    const Eigen::MatrixXd cov = tw_state(kCanonical, zt).cov();
    CHECK((cov - ref_cov).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, ref_cov.cwiseAbs().maxCoeff()));
  }

  for (int i = 0; i <= 300; ++i) {
    const double zt = 0.01 * i;
    const auto s = tw_state(kCanonical, zt);
    for (auto [a, b] : {std::pair{0, 2}, std::pair{2, 0}}) {
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      const double vx = inferred_variance(s, Quad::x(ua), Quad::x(ub));
      const double vy = inferred_variance(s, Quad::y(ua), Quad::y(ub));
      CHECK(near(vx, vy, 1e-10));
    }
    const double pi = reid_product(s, 0, 2).value;
    CHECK(key_rate(pi).violated == (pi < key_rate_threshold()));
    // Steering persists for all zt > 0, but DS- only witnesses the pair up
    // to zt = ln 9 (scipy brentq on the matexp state).
    if (zt > 0.0) CHECK(pi < 1.0);
    if (zt > 0.0 && zt < std::log(9.0) - 1e-9) CHECK(duan_simon(s, 0, 2).minus.violated);
    if (zt > std::log(9.0) + 1e-9) CHECK_FALSE(duan_simon(s, 0, 2).minus.violated);
  }
  CHECK(near(duan_simon(tw_state(kCanonical, std::log(9.0)), 0, 2).minus.value, 4.0, 1e-12));
}
