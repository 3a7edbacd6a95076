#include "rabi2q/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace rabi2q::entangle {

namespace {
constexpr double kTol = 1e-12;
}

TwoQubitDensityMatrix::TwoQubitDensityMatrix(const Eigen::Matrix4d& entries)
    : entries_(entries) {
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kTol) {
    throw std::invalid_argument("TwoQubitDensityMatrix: not symmetric");
  }
  if (std::abs(entries_.trace() - 1.0) > kTol) {
    throw std::invalid_argument("TwoQubitDensityMatrix: trace differs from 1");
  }
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

double TwoQubitDensityMatrix::min_eigenvalue() const {
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(entries_, Eigen::EigenvaluesOnly)
      .eigenvalues()(0);
}

Eigen::Matrix<double, 4, 3> triplet_embedding(QubitBasis basis) {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix<double, 4, 3> e;
  if (basis == QubitBasis::Coupling) {
    e << 1, 0, 0,
         0, s, 0,
         0, s, 0,
         0, 0, 1;
  } else {
    e << 0.5,  s,  0.5,
         0.5,  0, -0.5,
         0.5,  0, -0.5,
         0.5, -s,  0.5;
  }
  return e;
}

TwoQubitDensityMatrix reduced_density_from_joint(const JointState& state, QubitBasis basis) {
  const Eigen::VectorXd& c = state.coefficients();
  if (std::abs(c.squaredNorm() - 1.0) > kTol) {
    throw std::invalid_argument("reduced_density_from_joint: state is not normalized");
  }
  const Eigen::Index nf = c.size() / 3;
  // Rows are Fock levels, columns atom levels.
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>> amp(c.data(), nf, 3);
  const Eigen::Matrix3d rho_atom = amp.transpose() * amp;
  const Eigen::Matrix<double, 4, 3> e = triplet_embedding(basis);
  return TwoQubitDensityMatrix(e * rho_atom * e.transpose());
}

TwoQubitDensityMatrix reduced_density_variational(double alpha, double beta) {
  const double b2 = beta * beta;
  const double half = std::exp(-0.5 * alpha * alpha);
  const double overlap = std::exp(-2.0 * alpha * alpha);
  const double cross = 2.0 * std::numbers::sqrt2 * beta * half;

  const double r11 = 1.0 + b2 + cross + overlap;
  const double r14 = 1.0 - b2 + overlap;
  const double r22 = 1.0 - overlap;
  const double r44 = 1.0 + b2 - cross + overlap;

  Eigen::Matrix4d rho;
  rho << r11, 0.0, 0.0, r14,
         0.0, r22, r22, 0.0,
         0.0, r22, r22, 0.0,
         r14, 0.0, 0.0, r44;
  return TwoQubitDensityMatrix(rho / (2.0 * (2.0 + b2)));
}

Eigen::Matrix4d partial_transpose(const Eigen::Matrix4d& rho, Qubit which) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2; ++j)
        for (int b = 0; b < 2; ++b) {
          const double v = which == Qubit::First ? rho(2 * j + a, 2 * i + b)
                                                 : rho(2 * i + b, 2 * j + a);
          out(2 * i + a, 2 * j + b) = v;
        }
  return out;
}

NegativityResult negativity_numerical(const TwoQubitDensityMatrix& rho, Qubit which) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(partial_transpose(rho.entries(), which),
                                                          Eigen::EigenvaluesOnly);
  NegativityResult r;
  r.method = NegativityMethod::NumericalPartialTranspose;
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda < 0.0) {
      r.negative_eigenvalues.push_back(lambda);
      sum += lambda;
    }
  }
  r.value = std::abs(sum);
  return r;
}

double negativity_closed_form(double alpha, double beta) {
  const double b2 = beta * beta;
  return std::max((2.0 * std::exp(-2.0 * alpha * alpha) - b2) / (2.0 * (2.0 + b2)), 0.0);
}

double negativity_small_g(const ModelParams& p) {
  const double sum = p.omega_a() + p.omega_c();
  return p.omega_c() * p.g() * p.g() / (4.0 * p.omega_a() * sum * sum);
}

double concurrence_approx(double alpha, double beta) {
  return 2.0 * negativity_closed_form(alpha, beta);
}

double exact_negativity(const ModelParams& p, const GroundStateOptions& opts) {
  const GroundStateResult gs = exact::ground_state(p, opts);
  return negativity_numerical(reduced_density_from_joint(gs.state)).value;
}

}  // namespace rabi2q::entangle
