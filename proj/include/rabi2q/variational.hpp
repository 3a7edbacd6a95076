// variational.hpp - Coherent-state variational ground state.
//
// Trial state (|a>_F |-1> + b |0>_F |0> + |-a>_F |+1>) / N with N^2 = 2 + b^2,
// real displacement a and real m = 0 weight b.

#pragma once

#include <optional>

#include "rabi2q/exact.hpp"
#include "rabi2q/model.hpp"

namespace rabi2q::variational {

struct VariationalSolution {
  double alpha = 0.0;
  double beta = 0.0;
  double energy = 0.0;
  double norm_sq = 2.0;
  // Stationarity residuals of dE/dalpha = 0 and dE/dbeta = 0, each written in
  // the "beta = ..." and "g = ..." forms.
  double residual_beta_form = 0.0;
  double residual_g_form = 0.0;
  // The second (alpha, beta) pair satisfying the stationarity system. It sits
  // at alpha > g / omega_c on the upper beta branch and is never the minimum.
  std::optional<std::pair<double, double>> spurious_stationary_point;
};

struct BetaRoots {
  double minus = 0.0;  // (-A - sqrt(A^2 + 2B^2)) / B
  double plus = 0.0;   // (-A + sqrt(A^2 + 2B^2)) / B
};

struct SmallCouplingEstimate {
  double alpha = 0.0;
  double beta = 0.0;
};

struct TrialState {
  JointState state;
  double truncation_deficit = 0.0;  // worst coherent-state deficit used
};

/// <H> = 2/(2 + b^2) (a^2 wc - 2 a g + sqrt(2) b wA exp(-a^2/2)).
double energy_expectation(double alpha, double beta, const ModelParams& p);

/// Both roots of B b^2 + 2 A b - 2 B = 0, the dE/dbeta = 0 condition.
BetaRoots beta_stationary(double alpha, const ModelParams& p);

/// dE/dalpha up to the positive factor 4 / (2 + b^2), evaluated on the
/// lower beta branch. Zero exactly where the alpha condition holds.
double alpha_stationarity(double alpha, const ModelParams& p);

/// Residuals of the two stationarity conditions at (alpha, beta).
std::pair<double, double> stationarity_residuals(double alpha, double beta, const ModelParams& p);

/// Minimizes <H> over alpha in [0, g / wc] with beta eliminated exactly.
/// Throws std::runtime_error if the returned point is not stationary to 1e-8.
VariationalSolution solve(const ModelParams& p);

/// Leading small-g forms of alpha and beta.
SmallCouplingEstimate small_g_approx(const ModelParams& p);

/// Trial state on a Fock truncation, renormalized once after assembly.
TrialState trial_state(double alpha, double beta, FockTruncation trunc);
inline TrialState trial_state(const VariationalSolution& sol, FockTruncation trunc) {
  return trial_state(sol.alpha, sol.beta, trunc);
}

}  // namespace rabi2q::variational
