#include "rabi2q/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rabi2q {

ModelParams::ModelParams(double omega_a, double omega_c, double g)
    : omega_a_(omega_a), omega_c_(omega_c), g_(g) {
  if (!std::isfinite(omega_a) || !std::isfinite(omega_c) || !std::isfinite(g)) {
    throw std::invalid_argument("ModelParams: parameters must be finite");
  }
  if (omega_a <= 0.0 || omega_c <= 0.0) {
    throw std::invalid_argument("ModelParams: omega_a and omega_c must be positive");
  }
  if (g < 0.0) {
    throw std::invalid_argument("ModelParams: g must be non-negative, got " + std::to_string(g));
  }
}

Spin1Operators spin1_matrices() {
  using C = std::complex<double>;
  const double s = 1.0 / std::sqrt(2.0);
  const C i(0.0, 1.0);

  Spin1Operators ops;
  ops.jx << 0, s, 0,
            s, 0, s,
            0, s, 0;
  // J+ = sqrt(2) (|+1><0| + |0><-1|) in this ordering; Jy = (J+ - J-)/(2i).
  ops.jy << 0, -i * s, 0,
            i * s, 0, -i * s,
            0, i * s, 0;
  ops.jz << 1, 0, 0,
            0, 0, 0,
            0, 0, -1;
  return ops;
}

Eigen::Matrix3d spin1_jx() { return spin1_matrices().jx.real(); }

Eigen::Matrix3d spin1_jz() { return spin1_matrices().jz.real(); }

Eigen::MatrixXd annihilation_matrix(FockTruncation trunc) {
  const auto d = static_cast<Eigen::Index>(trunc.fock_dim());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& p, FockTruncation trunc) {
  const auto nf = static_cast<Eigen::Index>(trunc.fock_dim());
  const auto na = static_cast<Eigen::Index>(kAtomDim);
  const Eigen::Matrix3d jx = spin1_jx();
  const Eigen::Matrix3d jz = spin1_jz();

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(nf * na, nf * na);
  for (Eigen::Index n = 0; n < nf; ++n) {
    const Eigen::Index off = n * na;
    h.block(off, off, na, na) += p.omega_a() * jx;
    h.block(off, off, na, na).diagonal().array() += p.omega_c() * static_cast<double>(n);
    if (n + 1 < nf) {
      // <n+1| (a + a^dag) |n> = sqrt(n+1)
      const double amp = p.g() * std::sqrt(static_cast<double>(n + 1));
      h.block(off + na, off, na, na) += amp * jz;
      h.block(off, off + na, na, na) += amp * jz;
    }
  }
  return 0.5 * (h + h.transpose());
}

Eigen::VectorXd apply_parity(const Eigen::VectorXd& v) {
  const Eigen::Index nf = v.size() / 3;
  Eigen::VectorXd out(v.size());
  for (Eigen::Index n = 0; n < nf; ++n) {
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    for (Eigen::Index k = 0; k < 3; ++k) out(n * 3 + (2 - k)) = sign * v(n * 3 + k);
  }
  return out;
}

Eigen::MatrixXd parity_matrix(FockTruncation trunc) {
  const auto d = static_cast<Eigen::Index>(trunc.product_dim());
  Eigen::MatrixXd pi(d, d);
  for (Eigen::Index k = 0; k < d; ++k) pi.col(k) = apply_parity(Eigen::VectorXd::Unit(d, k));
  return pi;
}

CoherentState coherent_state_vector(double amplitude, FockTruncation trunc) {
  const auto d = static_cast<Eigen::Index>(trunc.fock_dim());
  CoherentState cs;
  cs.amplitudes.resize(d);
  // Recurrence c_n = c_{n-1} x / sqrt(n) avoids overflowing n!.
  double c = std::exp(-0.5 * amplitude * amplitude);
  cs.amplitudes(0) = c;
  for (Eigen::Index n = 1; n < d; ++n) {
    c *= amplitude / std::sqrt(static_cast<double>(n));
    cs.amplitudes(n) = c;
  }
  cs.truncation_deficit = 1.0 - cs.amplitudes.squaredNorm();
  return cs;
}

}  // namespace rabi2q
