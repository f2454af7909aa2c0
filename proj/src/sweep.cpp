#include "cvtri/sweep.hpp"

#include "cvtri/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cvtri {

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points < 2) throw std::invalid_argument("linspace: need at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("linspace: need lo < hi");
  std::vector<double> out(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<SymmetricRow> symmetric_sweep(double mu, double nu, std::span<const double> r_grid,
                                          Execution exec) {
  const bool symmetric_config = std::abs(mu - 2.0 / 3.0) < 1e-12 && std::abs(nu - 0.5) < 1e-12;
  std::vector<SymmetricRow> rows(r_grid.size());
  for_each_index(r_grid.size(), exec, [&](std::size_t i) {
    const double r = r_grid[i];
    const GaussianState s = build_symmetric_state({r, mu, nu});
    const DuanSimon ds = duan_simon(s, 0, 1);
    double pi_min = std::numeric_limits<double>::infinity();
    for (const auto& [steered, steerer] : kOrderedPairs) {
      pi_min = std::min(pi_min, reid_product(s, steered, steerer).value);
    }
    const double single[] = {r};
    rows[i] = SymmetricRow{r,
                           ds.plus.value,
                           ds.minus.value,
                           pi_min,
                           vlf_pair(s, 0, 1, 2).value,
                           vlf_trio(s, 0, 1, 2).value,
                           wang_bound(3, 1, r),
                           wang_bound(3, 2, r),
                           symmetric_config ? verify_consistency(single)
                                            : std::numeric_limits<double>::quiet_NaN()};
  });
  return rows;
}

AsymRow asym_tw_row(const AsymParams& params, double zt) {
  const GaussianState s = tw_state(params, zt);
  const double pi_13 = reid_product(s, 0, 2).value;
  const double pi_31 = reid_product(s, 2, 0).value;
  return AsymRow{zt,
                 duan_simon(s, 0, 2).minus.value,
                 vlf_trio(s, 0, 1, 2).value,
                 vlf_trio(s, 2, 0, 1).value,
                 vlf_pair(s, 0, 2, 1).value,
                 pi_13,
                 pi_31,
                 key_rate(pi_13).value,
                 key_rate(pi_31).value};
}

std::vector<AsymRow> asym_tw_sweep(const AsymParams& params, std::span<const double> zt_grid,
                                   Execution exec) {
  std::vector<AsymRow> rows(zt_grid.size());
  for_each_index(zt_grid.size(), exec,
                 [&](std::size_t i) { rows[i] = asym_tw_row(params, zt_grid[i]); });
  return rows;
}

std::vector<CavityRow> cavity_omega_sweep(const CavitySystem& system,
                                          std::span<const double> omegas, Execution exec) {
  std::vector<CavityRow> rows(omegas.size());
  for_each_index(omegas.size(), exec, [&](std::size_t i) {
    const GaussianState s = spectral_state(system, omegas[i]);
    CavityRow row{omegas[i], {}, {}};
    for (std::size_t p = 0; p < kOrderedPairs.size(); ++p) {
      row.pi[p] = reid_product(s, kOrderedPairs[p].steered, kOrderedPairs[p].steerer).value;
      row.k[p] = key_rate(row.pi[p]).value;
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace cvtri
