#include "cvtri/symmetric.hpp"

#include "cvtri/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvtri {

QuadratureMap symmetric_network(double mu, double nu) {
  // BS1 leaves the negated internal beam in slot 1 and BS2 leaves output 2
  // negated; the two phase flips restore the textbook sign pattern.
  const QuadratureMap bs1 = beamsplitter_map(3, 0, 1, mu);
  const QuadratureMap bs2 = beamsplitter_map(3, 1, 2, nu);
  return phase_flip_map(3, 2).after(bs2.after(phase_flip_map(3, 1).after(bs1)));
}

GaussianState build_symmetric_state(const SymmetricParams& params) {
  const GaussianState inputs = squeezed_inputs({{Quadrature::Y, params.r},
                                                {Quadrature::X, params.r},
                                                {Quadrature::X, params.r}});
  return apply_map(inputs, symmetric_network(params.mu, params.nu));
}

SymmetricClosedForms closed_forms(double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("closed_forms: r must be >= 0");
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const double e1 = std::exp(r);
  const double e2 = std::exp(2.0 * r);
  const double e3 = std::exp(3.0 * r);
  SymmetricClosedForms f{};
  f.ds_plus = 4.0 * ch + 8.0 / 3.0 * sh;
  f.ds_minus = 4.0 * ch - 8.0 / 3.0 * sh;
  f.v_inf = (3.0 * ch + sh) / (2.0 + e2);
  f.reid_product = 1.0;
  f.v_ij = (2.0 + 10.0 * e2) / (e1 + 2.0 * e3);
  f.v_ijk = 4.0 * (ch - 2.0 * std::numbers::sqrt2 / 3.0 * sh);
  return f;
}

double verify_consistency(std::span<const double> r_grid) {
  if (r_grid.empty()) throw std::invalid_argument("verify_consistency: empty grid");
  static constexpr std::array<std::array<std::size_t, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  double worst = 0.0;
  for (double r : r_grid) {
    const SymmetricClosedForms f = closed_forms(r);
    const GaussianState state = build_symmetric_state({r, 2.0 / 3.0, 0.5});
    auto track = [&worst](double numeric, double analytic) {
      worst = std::max(worst, std::abs(numeric - analytic));
    };
    for (const auto& [i, j, k] : kPerms) {
      const DuanSimon ds = duan_simon(state, i, j);
      track(ds.plus.value, f.ds_plus);
      track(ds.minus.value, f.ds_minus);
      track(inferred_variance(state, Quad::x(i), Quad::x(j)), f.v_inf);
      track(inferred_variance(state, Quad::y(i), Quad::y(j)), 1.0 / f.v_inf);
      track(reid_product(state, i, j).value, f.reid_product);
      track(vlf_pair(state, i, j, k).value, f.v_ij);
      track(vlf_trio(state, i, j, k).value, f.v_ijk);
    }
  }
  return worst;
}

}  // namespace cvtri
