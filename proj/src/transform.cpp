#include "rabi2q/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "rabi2q/variational.hpp"

namespace rabi2q::transform {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kEquivalenceTol = 1e-9;
}  // namespace

Eigen::Matrix3d dressed_atom_operator(double chi, const ModelParams& p) {
  const double eta = std::exp(-0.5 * chi * chi);
  const double shift = 2.0 * p.g() * chi - p.omega_c() * chi * chi;
  const Eigen::Matrix3d jz = spin1_jz();
  return eta * p.omega_a() * spin1_jx() - shift * jz * jz;
}

TransformSolution dressed_levels(double chi, const ModelParams& p) {
  TransformSolution s;
  s.chi = chi;
  s.eta = std::exp(-0.5 * chi * chi);
  const double scale = s.eta * p.omega_a();
  s.mu = (2.0 * p.g() * chi - p.omega_c() * chi * chi) / scale;

  const double root = std::sqrt(4.0 + s.mu * s.mu);
  s.eps_zero = -s.mu * scale;
  s.eps_minus = scale * (-s.mu - root) / 2.0;
  s.eps_plus = scale * (-s.mu + root) / 2.0;
  s.lambda_minus = (s.mu - root) / kSqrt2;
  s.lambda_plus = (s.mu + root) / kSqrt2;
  s.n_minus_sq = 2.0 + s.lambda_minus * s.lambda_minus;
  s.n_plus_sq = 2.0 + s.lambda_plus * s.lambda_plus;

  s.vec_minus = Eigen::Vector3d(1.0, s.lambda_minus, 1.0) / std::sqrt(s.n_minus_sq);
  s.vec_plus = Eigen::Vector3d(1.0, s.lambda_plus, 1.0) / std::sqrt(s.n_plus_sq);
  s.vec_zero = Eigen::Vector3d(1.0, 0.0, -1.0) / kSqrt2;
  return s;
}

TransformSolution solve_chi(const ModelParams& p) {
  const variational::VariationalSolution v = variational::solve(p);
  TransformSolution s = dressed_levels(v.alpha, p);

  if (std::abs(s.eps_minus - v.energy) > kEquivalenceTol ||
      std::abs(s.lambda_minus - v.beta) > kEquivalenceTol) {
    throw std::logic_error("transform::solve_chi: dressed ground level " +
                           std::to_string(s.eps_minus) + " disagrees with variational energy " +
                           std::to_string(v.energy));
  }
  s.delta_e = perturbation_correction(s, p);
  return s;
}

double perturbation_correction(const TransformSolution& s, const ModelParams& p) {
  const double chi4 = std::pow(s.chi, 4);
  const double wc = p.omega_c();
  const double two_photon = 2.0 * s.eps_plus * s.eps_plus / (s.n_minus_sq * wc);
  const double via_plus =
      s.eps_zero * s.eps_zero / (s.n_plus_sq * (2.0 * wc + s.eps_plus - s.eps_minus));
  return -(2.0 * chi4 / s.n_minus_sq) * (two_photon + via_plus);
}

double h2_perturbation_oracle(const TransformSolution& s, const ModelParams& p,
                              FockTruncation trunc) {
  const auto nf = static_cast<Eigen::Index>(trunc.fock_dim());
  const Eigen::MatrixXd a = annihilation_matrix(trunc);
  const Eigen::MatrixXd ad = a.transpose();
  const Eigen::MatrixXd field = ad * ad - 2.0 * ad * a + a * a;

  // Dressed basis from a direct 3x3 eigensolve, ascending: (-, 0, +).
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(dressed_atom_operator(s.chi, p));
  const Eigen::Matrix3d& u = es.eigenvectors();
  const Eigen::Matrix3d jx_dressed = u.transpose() * spin1_jx() * u;
  const Eigen::Vector3d levels = es.eigenvalues();

  const double prefactor = 0.5 * std::exp(-0.5 * s.chi * s.chi) * s.chi * s.chi * p.omega_a();
  const double e_ref = levels(0);  // |0>_F |->

  double shift = 0.0;
  for (Eigen::Index n = 0; n < nf; ++n) {
    for (Eigen::Index nu = 0; nu < 3; ++nu) {
      if (n == 0 && nu == 0) continue;
      const double element = prefactor * field(n, 0) * jx_dressed(nu, 0);
      if (element == 0.0) continue;
      const double e_int = levels(nu) + static_cast<double>(n) * p.omega_c();
      shift += element * element / (e_ref - e_int);
    }
  }
  return shift;
}

}  // namespace rabi2q::transform
