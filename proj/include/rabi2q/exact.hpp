// exact.hpp - Numerically exact ground state with adaptive Fock truncation.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rabi2q/model.hpp"

namespace rabi2q {

/// Normalized product-basis vector. The largest-magnitude coefficient is
/// made positive on construction.
class JointState {
 public:
  JointState(Eigen::VectorXd coefficients, std::size_t n_max);

  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  std::size_t n_max() const { return n_max_; }

  /// Zero-padded copy on a larger truncation.
  JointState padded_to(std::size_t n_max) const;

 private:
  Eigen::VectorXd coefficients_;
  std::size_t n_max_;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroundStateOptions {
  double tol = 1e-10;            // energy change between successive truncations
  std::size_t n_max_start = 16;
  std::size_t n_max_cap = 4096;
};

struct GroundStateResult {
  double energy = 0.0;
  JointState state;
  std::size_t n_max_used = 0;
  double convergence_gap = 0.0;  // |E(n_max) - E(n_max / 2)|
  double spectral_gap = 0.0;     // E_1 - E_0 at n_max_used
  double residual = 0.0;         // |H v - E v|
  std::vector<double> energy_ladder;  // ground energy at each truncation tried
};

namespace exact {

/// Lowest eigenpair of a real symmetric matrix.
std::pair<double, Eigen::VectorXd> lowest_eigenpair(const Eigen::MatrixXd& h,
                                                    double* next_eigenvalue = nullptr);

/// Lowest eigenpair of build_hamiltonian, doubling n_max until the ground
/// energy moves by less than opts.tol. Throws ConvergenceError past the cap.
GroundStateResult ground_state(const ModelParams& p, const GroundStateOptions& opts = {});

/// |<a, b>|; the shorter state is zero-padded first.
double fidelity(const JointState& a, const JointState& b);

}  // namespace exact
}  // namespace rabi2q
