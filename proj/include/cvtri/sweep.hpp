#pragma once

// Grid sweeps over the three models. Each grid point is independent; the
// Parallel path spreads points over OpenMP threads, the Serial path is the
// reference used by the tests. Rows are always returned in grid order.
//
// Mode labels in row fields are 1-based (pi_13 is mode 1 steered by mode 3).

#include "cvtri/asym_tw.hpp"
#include "cvtri/cavity.hpp"
#include "cvtri/execution.hpp"
#include "cvtri/symmetric.hpp"

#include <array>
#include <span>
#include <vector>

namespace cvtri {

/// `points` evenly spaced values from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t points);

struct SymmetricRow {
  double r;
  double ds_plus;   // pair (1,2)
  double ds_minus;  // pair (1,2)
  double pi_min;    // smallest Reid product over all ordered pairs
  double v_ij;      // V_12 with gain on mode 3
  double v_ijk;     // V_123
  double e_3_1;     // steering function, N=3, M=1
  double e_3_2;     // N=3, M=2
  double closed_form_err;  // NaN unless mu=2/3, nu=1/2
};

std::vector<SymmetricRow> symmetric_sweep(double mu, double nu, std::span<const double> r_grid,
                                          Execution exec = Execution::Parallel);

struct AsymRow {
  double zt;
  double ds_minus_13;
  double v_123;
  double v_312;
  double v_13;
  double pi_13;
  double pi_31;
  double k_13;
  double k_31;
};

AsymRow asym_tw_row(const AsymParams& params, double zt);

std::vector<AsymRow> asym_tw_sweep(const AsymParams& params, std::span<const double> zt_grid,
                                   Execution exec = Execution::Parallel);

struct CavityRow {
  double omega;
  std::array<double, 6> pi;  // kOrderedPairs order
  std::array<double, 6> k;
};

std::vector<CavityRow> cavity_omega_sweep(const CavitySystem& system,
                                          std::span<const double> omegas,
                                          Execution exec = Execution::Parallel);

}  // namespace cvtri
