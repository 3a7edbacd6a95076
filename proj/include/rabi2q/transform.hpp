// transform.hpp - Displacement (polaron-type) transformation method.
//
// After H' = e^S H e^-S with S = chi (a^dag - a) Jz, the atomic part of the
// retained Hamiltonian is the dressed three-level operator
//
//   eta wA Jx - (2 g chi - wc chi^2) Jz^2,     eta = exp(-chi^2 / 2),
//
// with levels eps_- < eps_0 < eps_+. The ground state is |0>_F |->, and the
// leading neglected term (eta chi^2 wA / 2) Jx (a^dag^2 - 2 a^dag a + a^2) is
// folded back in at second order.

#pragma once

#include <Eigen/Dense>

#include "rabi2q/model.hpp"

namespace rabi2q::transform {

struct TransformSolution {
  double chi = 0.0;
  double eta = 1.0;
  double mu = 0.0;  // (2 g chi - wc chi^2) / (eta wA)
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
  double n_minus_sq = 0.0;  // 2 + lambda_-^2
  double n_plus_sq = 0.0;
  double eps_minus = 0.0;
  double eps_zero = 0.0;
  double eps_plus = 0.0;
  double delta_e = 0.0;  // second-order correction; zero until filled

  /// Dressed eigenvectors in the m = (+1, 0, -1) ordering.
  Eigen::Vector3d vec_minus = Eigen::Vector3d::Zero();
  Eigen::Vector3d vec_zero = Eigen::Vector3d::Zero();
  Eigen::Vector3d vec_plus = Eigen::Vector3d::Zero();

  double corrected_energy() const { return eps_minus + delta_e; }

  /// The second-order expansion assumes chi < 1; outside it delta_e is still
  /// evaluated but should be read as a rough estimate.
  bool within_expansion_regime() const { return chi < 1.0; }
};

/// The 3x3 operator eta wA Jx - (2 g chi - wc chi^2) Jz^2.
Eigen::Matrix3d dressed_atom_operator(double chi, const ModelParams& p);

/// Closed-form dressed levels and eigenvectors at a given chi (delta_e = 0).
TransformSolution dressed_levels(double chi, const ModelParams& p);

/// chi from the condition that removes the counter-rotating coupling of the
/// lowest dressed level. That condition coincides with the variational
/// stationarity system, so chi and lambda_- are taken from variational::solve
/// and checked: throws std::logic_error if eps_- and E_v differ by > 1e-9.
/// delta_e is filled in.
TransformSolution solve_chi(const ModelParams& p);

/// Closed-form second-order energy shift.
double perturbation_correction(const TransformSolution& sol, const ModelParams& p);

/// Same shift by explicit sum over the unperturbed states |n>_F |nu> with
/// energies eps_nu + n wc. Only sol.chi is used: the dressed levels come from
/// a numerical 3x3 eigensolve and the perturbation is a truncated matrix.
double h2_perturbation_oracle(const TransformSolution& sol, const ModelParams& p,
                              FockTruncation trunc);

}  // namespace rabi2q::transform
