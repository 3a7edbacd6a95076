// entangle.hpp - Qubit-qubit entanglement of the ground state.
//
// Two-qubit basis order is |ee>, |eg>, |ge>, |gg> (index 2 q1 + q2, e = 0,
// g = 1). By default e/g are the bare qubit levels, i.e. the sigma_x
// eigenstates, since the free atomic term is wA Jx. With u/d the sigma_z
// states, |e> = (|u> + |d>)/sqrt(2) and |g> = (|u> - |d>)/sqrt(2), so
//   |m=+1> = |uu> = (|ee> + |eg> + |ge> + |gg>) / 2
//   |m= 0>        = (|ee> - |gg>) / sqrt(2)
//   |m=-1> = |dd> = (|ee> - |eg> - |ge> + |gg>) / 2.
// QubitBasis::Coupling instead labels e = u, g = d.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rabi2q/exact.hpp"
#include "rabi2q/model.hpp"

namespace rabi2q::entangle {

/// Real symmetric 4x4 reduced density matrix. The constructor checks
/// symmetry and unit trace to 1e-12 and throws std::invalid_argument.
class TwoQubitDensityMatrix {
 public:
  explicit TwoQubitDensityMatrix(const Eigen::Matrix4d& entries);

  const Eigen::Matrix4d& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }
  double trace() const { return entries_.trace(); }
  double min_eigenvalue() const;

 private:
  Eigen::Matrix4d entries_;
};

enum class Qubit { First, Second };
enum class QubitBasis { Bare, Coupling };
enum class NegativityMethod { NumericalPartialTranspose, ClosedForm, SmallCoupling };

struct NegativityResult {
  double value = 0.0;
  std::vector<double> negative_eigenvalues;
  NegativityMethod method = NegativityMethod::NumericalPartialTranspose;
};

/// 4x4 embedding of the spin-1 levels (columns m = +1, 0, -1).
Eigen::Matrix<double, 4, 3> triplet_embedding(QubitBasis basis = QubitBasis::Bare);

/// Tr_F |psi><psi| mapped onto the two-qubit space.
TwoQubitDensityMatrix reduced_density_from_joint(const JointState& state,
                                                 QubitBasis basis = QubitBasis::Bare);

/// Closed-form X-shaped matrix for the coherent-state trial family, in the
/// bare basis.
TwoQubitDensityMatrix reduced_density_variational(double alpha, double beta);

Eigen::Matrix4d partial_transpose(const Eigen::Matrix4d& rho, Qubit which = Qubit::First);

/// Sum of the negative eigenvalues of the partial transpose, in magnitude.
NegativityResult negativity_numerical(const TwoQubitDensityMatrix& rho, Qubit which = Qubit::First);

/// max{(2 exp(-2 a^2) - b^2) / (2 (2 + b^2)), 0}.
double negativity_closed_form(double alpha, double beta);

/// wc g^2 / (4 wA (wA + wc)^2).
double negativity_small_g(const ModelParams& p);

/// Twice the closed-form negativity.
double concurrence_approx(double alpha, double beta);

/// Negativity of the exact ground state at p.
double exact_negativity(const ModelParams& p, const GroundStateOptions& opts = {});

}  // namespace rabi2q::entangle
