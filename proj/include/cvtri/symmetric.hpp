#pragma once

// Three squeezed beams mixed on two beamsplitters. Input 0 is squeezed in Y,
// inputs 1 and 2 in X. BS1 (reflectivity mu) mixes inputs 0 and 1, giving
// output 0 and an internal beam; BS2 (reflectivity nu) mixes the internal
// beam with input 2, giving outputs 1 and 2. mu = 2/3, nu = 1/2 makes the
// output fully symmetric under mode exchange.

#include "cvtri/gaussian.hpp"

#include <span>

namespace cvtri {

struct SymmetricParams {
  double r = 0.0;
  double mu = 2.0 / 3.0;
  double nu = 0.5;
};

/// Passive network map from the three OPO outputs to the three output beams.
QuadratureMap symmetric_network(double mu, double nu);

GaussianState build_symmetric_state(const SymmetricParams& params);

/// Analytic values for the fully symmetric configuration.
struct SymmetricClosedForms {
  double ds_plus;
  double ds_minus;
  double v_inf;  // inferred X variance; the inferred Y variance is its inverse
  double reid_product;
  double v_ij;   // optimised pairwise van Loock-Furusawa sum
  double v_ijk;
};

SymmetricClosedForms closed_forms(double r);

/// Largest |numeric - analytic| over the grid, every ordered pair or triple
/// of output modes, and every criterion covered by closed_forms.
double verify_consistency(std::span<const double> r_grid);

}  // namespace cvtri
