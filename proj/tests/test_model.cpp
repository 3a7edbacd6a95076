#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "rabi2q/model.hpp"

using namespace rabi2q;

TEST_CASE("ModelParams rejects invalid values") {
  CHECK_NOTHROW(ModelParams(1.0, 1.0, 0.0));
  CHECK_THROWS_AS(ModelParams(0.0, 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, -1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1.0, 1.0, std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(std::numeric_limits<double>::infinity(), 1.0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("spin-1 matrices") {
  const Spin1Operators s = spin1_matrices();
  const std::complex<double> i(0.0, 1.0);

  CHECK((s.jz.real() - Eigen::Vector3d(1, 0, -1).asDiagonal().toDenseMatrix()).norm() == 0.0);

  SUBCASE("Jx |0> = (|+1> + |-1>) / sqrt(2)") {
    const Eigen::Vector3cd v = s.jx * Eigen::Vector3cd(0, 1, 0);
    CHECK(std::abs(v(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(v(1)) == 0.0);
    CHECK(std::abs(v(2) - 1.0 / std::sqrt(2.0)) < 1e-15);
  }

  SUBCASE("angular momentum algebra") {
    CHECK((s.jx * s.jy - s.jy * s.jx - i * s.jz).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((s.jy * s.jz - s.jz * s.jy - i * s.jx).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((s.jz * s.jx - s.jx * s.jz - i * s.jy).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("Casimir and hermiticity") {
    const Eigen::Matrix3cd casimir = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
    CHECK((casimir - 2.0 * Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((s.jy - s.jy.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(s.jy.real().cwiseAbs().maxCoeff() == 0.0);
    CHECK(s.jx.imag().cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("annihilation operator") {
  Eigen::Matrix2d expected;
  expected << 0, 1, 0, 0;
  CHECK(annihilation_matrix({1}) == expected);

  const Eigen::MatrixXd a = annihilation_matrix({3});
  CHECK((a.transpose() * a - Eigen::Vector4d(0, 1, 2, 3).asDiagonal().toDenseMatrix()).norm() < 1e-14);

  Eigen::Matrix3d x;
  x << 0, 1, 0,
       1, 0, std::sqrt(2.0),
       0, std::sqrt(2.0), 0;
  const Eigen::MatrixXd a2 = annihilation_matrix({2});
  CHECK((a2 + a2.transpose() - x).norm() < 1e-15);
}

TEST_CASE("Hamiltonian assembly") {
  SUBCASE("hand-assembled 6x6 at n_max = 1") {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix<double, 6, 6> h;
    // basis: |0,+1> |0,0> |0,-1> |1,+1> |1,0> |1,-1>
    h << 0,   s,   0,   0.5, 0,   0,
         s,   0,   s,   0,   0,   0,
         0,   s,   0,   0,   0,   -0.5,
         0.5, 0,   0,   1,   s,   0,
         0,   0,   0,   s,   1,   s,
         0,   0,   -0.5, 0,  s,   1;
    const Eigen::MatrixXd built = build_hamiltonian(ModelParams(1.0, 1.0, 0.5), {1});
    CHECK((built - h).cwiseAbs().maxCoeff() < 1e-15);
  }

  const ModelParams p(1.0, 1.3, 0.7);
  const FockTruncation trunc{20};
  const Eigen::MatrixXd h = build_hamiltonian(p, trunc);

  SUBCASE("exactly symmetric") { CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0); }

  SUBCASE("block-tridiagonal in the photon number") {
    for (Eigen::Index r = 0; r < h.rows(); ++r)
      for (Eigen::Index c = 0; c < h.cols(); ++c)
        if (std::abs(r / 3 - c / 3) > 1) REQUIRE(h(r, c) == 0.0);
  }

  SUBCASE("commutes with parity") {
    const Eigen::MatrixXd pi = parity_matrix(trunc);
    CHECK((h * pi - pi * h).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pi * pi - Eigen::MatrixXd::Identity(h.rows(), h.cols())).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("decoupled ground energy is -omega_a") {
    for (std::size_t n_max : {0u, 3u, 10u}) {
      const Eigen::MatrixXd h0 = build_hamiltonian(ModelParams(1.7, 0.9, 0.0), {n_max});
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h0);
      CHECK(es.eigenvalues()(0) == doctest::Approx(-1.7).epsilon(1e-14));
    }
  }
}

TEST_CASE("coherent states") {
  SUBCASE("vacuum") {
    const CoherentState v = coherent_state_vector(0.0, {5});
    CHECK(v.amplitudes(0) == 1.0);
    CHECK(v.amplitudes.tail(5).norm() == 0.0);
    CHECK(v.truncation_deficit == 0.0);
  }

  SUBCASE("norm matches the Poisson weights") {
    const CoherentState v = coherent_state_vector(0.5, {20});
    double poisson = 0.0;
    double term = std::exp(-0.25);
    for (int n = 0; n <= 20; ++n) {
      poisson += term;
      term *= 0.25 / (n + 1);
    }
    CHECK(std::abs(v.amplitudes.squaredNorm() - 1.0) < 1e-12);
    CHECK(std::abs(v.amplitudes.squaredNorm() - poisson) < 1e-15);
  }

  SUBCASE("overlap <a|-a> = exp(-2 a^2)") {
    const double overlap =
        coherent_state_vector(0.3, {30}).amplitudes.dot(coherent_state_vector(-0.3, {30}).amplitudes);
    CHECK(overlap == doctest::Approx(std::exp(-0.18)).epsilon(1e-14));
    CHECK(overlap == doctest::Approx(0.83527).epsilon(1e-5));
  }

  SUBCASE("truncation deficit is reported") {
    const CoherentState v = coherent_state_vector(2.0, {3});
    CHECK(v.truncation_deficit > 0.1);
    CHECK(v.deficit_exceeds(1e-12));
    CHECK_FALSE(coherent_state_vector(2.0, {60}).deficit_exceeds(1e-12));
  }

  SUBCASE("displacement <a|(a + a^dag)|a> converges to 2a") {
    double previous = 1.0;
    for (std::size_t n_max : {2u, 4u, 8u, 16u, 24u}) {
      const Eigen::VectorXd v = coherent_state_vector(0.5, {n_max}).amplitudes;
      const Eigen::MatrixXd a = annihilation_matrix({n_max});
      const double err = std::abs(v.dot((a + a.transpose()) * v) - 1.0);
      CHECK(err <= previous);
      previous = err;
    }
    CHECK(previous < 1e-12);
  }
}
