#pragma once

// Entanglement, EPR-steering and key-rate criteria on Gaussian states.
//
// Bounds follow the unit-vacuum convention: Reid products are compared with
// 1, Duan-Simon and van Loock-Furusawa sums with 4, key rates with 0.
// Violation flags use strict inequalities; a value sitting exactly on the
// bound is reported as not violated.

#include "cvtri/gaussian.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cvtri {

enum class CriterionId {
  ReidProduct,
  DuanSimonPlus,
  DuanSimonMinus,
  VlfPair,
  VlfTrio,
  WangBound,
  KeyRate,
};

std::string_view to_string(CriterionId id);

struct CriterionResult {
  CriterionId id;
  double value;
  double bound;
  bool violated;
  std::optional<std::size_t> steered_mode;
  std::vector<std::size_t> steering_modes;
};

inline constexpr double kReidBound = 1.0;
inline constexpr double kVarianceSumBound = 4.0;
inline constexpr double kKeyRateBound = 0.0;

/// Optimal linear inference: V(t) - Cov(t, ref)^2 / V(ref).
double inferred_variance(const GaussianState& state, Quad target, Quad reference);

/// V_inf(X_steered | X_steerer) * V_inf(Y_steered | Y_steerer).
CriterionResult reid_product(const GaussianState& state, std::size_t steered, std::size_t steerer);

struct DuanSimon {
  CriterionResult plus;   // V(X_i + X_j) + V(Y_i - Y_j)
  CriterionResult minus;  // V(X_i - X_j) + V(Y_i + Y_j)
};

DuanSimon duan_simon(const GaussianState& state, std::size_t i, std::size_t j);

/// Gain on Y_k minimising V(Y_i + Y_j + g Y_k).
double vlf_optimal_gain(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k);

/// V(X_i - X_j) + V(Y_i + Y_j + g Y_k) at a caller-chosen gain.
double vlf_pair_value(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k,
                      double gain);

/// Pairwise van Loock-Furusawa sum at the optimal gain.
CriterionResult vlf_pair(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k);

/// V(X_i - (X_j + X_k)/sqrt2) + V(Y_i + (Y_j + Y_k)/sqrt2).
CriterionResult vlf_trio(const GaussianState& state, std::size_t i, std::size_t j, std::size_t k);

/// Steering function for an N-mode squeezed-state cascade, M modes steering
/// one. Values below one signal steering.
double wang_bound(int n_outputs, int n_steering, double r);

/// Lower bound on the one-sided device-independent key rate in bits,
/// log2(2 / (e * sqrt(reid_value))).
CriterionResult key_rate(double reid_value);

/// Reid product value below which key_rate is positive: (2/e)^2.
double key_rate_threshold();

}  // namespace cvtri
