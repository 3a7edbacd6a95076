#include "rabi2q/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

namespace rabi2q {

JointState::JointState(Eigen::VectorXd coefficients, std::size_t n_max)
    : coefficients_(std::move(coefficients)), n_max_(n_max) {
  if (static_cast<std::size_t>(coefficients_.size()) != kAtomDim * (n_max + 1)) {
    throw std::invalid_argument("JointState: length does not match 3 (n_max + 1)");
  }
  const double norm = coefficients_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("JointState: zero or non-finite vector");
  }
  coefficients_ /= norm;
  Eigen::Index k = 0;
  coefficients_.cwiseAbs().maxCoeff(&k);
  if (coefficients_(k) < 0.0) coefficients_ = -coefficients_;
}

JointState JointState::padded_to(std::size_t n_max) const {
  if (n_max < n_max_) throw std::invalid_argument("JointState::padded_to: cannot shrink");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(kAtomDim * (n_max + 1)));
  v.head(coefficients_.size()) = coefficients_;
  return JointState(std::move(v), n_max);
}

namespace exact {

std::pair<double, Eigen::VectorXd> lowest_eigenpair(const Eigen::MatrixXd& h,
                                                    double* next_eigenvalue) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  if (next_eigenvalue != nullptr) {
    *next_eigenvalue = h.rows() > 1 ? es.eigenvalues()(1)
                                    : std::numeric_limits<double>::quiet_NaN();
  }
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

GroundStateResult ground_state(const ModelParams& p, const GroundStateOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("ground_state: tol must be positive");
  if (opts.n_max_start < 8) throw std::invalid_argument("ground_state: n_max_start must be >= 8");

  std::vector<double> ladder;
  std::size_t n_max = opts.n_max_start;
  double previous = std::numeric_limits<double>::quiet_NaN();

  while (n_max <= opts.n_max_cap) {
    const FockTruncation trunc{n_max};
    const Eigen::MatrixXd h = build_hamiltonian(p, trunc);
    double next = 0.0;
    auto [energy, vec] = lowest_eigenpair(h, &next);
    ladder.push_back(energy);

    const double change = std::abs(energy - previous);
    if (std::isfinite(previous) && change < opts.tol) {
      GroundStateResult r{energy, JointState(vec, n_max), n_max, change, next - energy,
                          0.0, std::move(ladder)};
      r.residual = (h * r.state.coefficients() - energy * r.state.coefficients()).norm();
      return r;
    }
    previous = energy;
    n_max *= 2;
  }
  std::ostringstream msg;
  msg << "ground_state: no convergence to tol " << opts.tol << " below n_max cap " << opts.n_max_cap
      << " (g = " << p.g() << ")";
  throw ConvergenceError(msg.str());
}

double fidelity(const JointState& a, const JointState& b) {
  const std::size_t n = std::max(a.n_max(), b.n_max());
  const JointState pa = a.padded_to(n);
  const JointState pb = b.padded_to(n);
  return std::min(1.0, std::abs(pa.coefficients().dot(pb.coefficients())));
}

}  // namespace exact
}  // namespace rabi2q
