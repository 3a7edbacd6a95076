// model.hpp - Two-qubit (spin-1) Rabi Hamiltonian on a truncated Fock space.
//
//   H = wA Jx + wc a^dag a + g (a + a^dag) Jz
//
// Product basis ordering is fock-major: index = n * 3 + atom, with the atom
// levels ordered m = (+1, 0, -1). Every module in the library uses it.

#pragma once

#include <cstddef>
#include <Eigen/Dense>

namespace rabi2q {

inline constexpr std::size_t kAtomDim = 3;

/// Atom index of the Jz eigenstate |m> in the basis ordering (+1, 0, -1).
constexpr std::size_t atom_index(int m) { return static_cast<std::size_t>(1 - m); }

/// Physical parameters (hbar = 1). Construction validates the invariants
/// omega_a > 0, omega_c > 0, g >= 0 and throws std::invalid_argument otherwise.
class ModelParams {
 public:
  ModelParams(double omega_a, double omega_c, double g);

  /// Resonance-style helper: omega_a = 1, everything in units of omega_a.
  static ModelParams in_atomic_units(double omega_c_over_a, double g_over_a) {
    return ModelParams(1.0, omega_c_over_a, g_over_a);
  }

  double omega_a() const { return omega_a_; }
  double omega_c() const { return omega_c_; }
  double g() const { return g_; }

  ModelParams with_g(double g) const { return ModelParams(omega_a_, omega_c_, g); }

 private:
  double omega_a_;
  double omega_c_;
  double g_;
};

/// Highest retained photon number.
struct FockTruncation {
  std::size_t n_max = 64;

  std::size_t fock_dim() const { return n_max + 1; }
  std::size_t product_dim() const { return kAtomDim * fock_dim(); }
};

struct Spin1Operators {
  Eigen::Matrix3cd jx;
  Eigen::Matrix3cd jy;
  Eigen::Matrix3cd jz;
};

/// Standard spin-1 matrices in the m = (+1, 0, -1) ordering.
Spin1Operators spin1_matrices();

/// Real parts of Jx and Jz; the Hamiltonian path never needs Jy.
Eigen::Matrix3d spin1_jx();
Eigen::Matrix3d spin1_jz();

/// a[n-1, n] = sqrt(n), dimension (n_max + 1).
Eigen::MatrixXd annihilation_matrix(FockTruncation trunc);

/// Real symmetric Hamiltonian on the product basis, exactly symmetric.
Eigen::MatrixXd build_hamiltonian(const ModelParams& p, FockTruncation trunc);

/// Conserved parity (-1)^{a^dag a} exp(i pi Jx). It is the signed permutation
/// |n, m> -> -(-1)^n |n, -m>, so it commutes with H exactly at any truncation.
Eigen::MatrixXd parity_matrix(FockTruncation trunc);

/// Parity applied to a product-basis vector without forming the matrix.
Eigen::VectorXd apply_parity(const Eigen::VectorXd& v);

struct CoherentState {
  Eigen::VectorXd amplitudes;
  /// 1 - |v|^2; the vector is left unnormalized so this is the weight lost
  /// above n_max.
  double truncation_deficit = 0.0;

  bool deficit_exceeds(double tol) const { return truncation_deficit > tol; }
};

/// Fock amplitudes exp(-x^2/2) x^n / sqrt(n!) for a real amplitude x.
CoherentState coherent_state_vector(double amplitude, FockTruncation trunc);

}  // namespace rabi2q
