#include "rabi2q/variational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace rabi2q::variational {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kScanPoints = 256;
constexpr double kResidualLimit = 1e-8;

struct Quadratic {
  double a_coef;  // A = a^2 wc - 2 a g
  double b_coef;  // B = sqrt(2) wA exp(-a^2/2)
};

Quadratic beta_quadratic(double alpha, const ModelParams& p) {
  return {alpha * alpha * p.omega_c() - 2.0 * alpha * p.g(),
          kSqrt2 * p.omega_a() * std::exp(-0.5 * alpha * alpha)};
}

double stationarity_on_branch(double alpha, double beta, const ModelParams& p) {
  return alpha * p.omega_c() - p.g() -
         beta * p.omega_a() * alpha * std::exp(-0.5 * alpha * alpha) / kSqrt2;
}

double toms748_root(auto&& f, double lo, double hi) {
  std::uintmax_t iters = 200;
  auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2),
      iters);
  return 0.5 * (a + b);
}

// The other stationary pair lies on the upper beta branch beyond g / wc,
// where the branch's alpha condition changes sign from negative to positive.
std::optional<std::pair<double, double>> find_spurious(const ModelParams& p) {
  auto h = [&](double a) { return stationarity_on_branch(a, beta_stationary(a, p).plus, p); };
  const double lo = p.g() / p.omega_c();
  double hi = lo;
  const double step = 0.25 * (lo + 1.0);
  for (int k = 0; k < 64; ++k) {
    hi += step;
    if (h(lo) < 0.0 && h(hi) > 0.0) {
      const double a = toms748_root(h, lo, hi);
      return std::make_pair(a, beta_stationary(a, p).plus);
    }
  }
  return std::nullopt;
}

}  // namespace

double energy_expectation(double alpha, double beta, const ModelParams& p) {
  const double bracket = alpha * alpha * p.omega_c() - 2.0 * alpha * p.g() +
                         kSqrt2 * beta * p.omega_a() * std::exp(-0.5 * alpha * alpha);
  return 2.0 / (2.0 + beta * beta) * bracket;
}

BetaRoots beta_stationary(double alpha, const ModelParams& p) {
  const auto [a, b] = beta_quadratic(alpha, p);
  const double disc = std::sqrt(a * a + 2.0 * b * b);
  // Cancellation-free pair: the large-magnitude root directly, the other via
  // the product of roots, which is -2.
  if (a >= 0.0) {
    const double minus = (-a - disc) / b;
    return {minus, -2.0 / minus};
  }
  const double plus = (-a + disc) / b;
  return {-2.0 / plus, plus};
}

double alpha_stationarity(double alpha, const ModelParams& p) {
  return stationarity_on_branch(alpha, beta_stationary(alpha, p).minus, p);
}

std::pair<double, double> stationarity_residuals(double alpha, double beta, const ModelParams& p) {
  const double wa = p.omega_a();
  const double wc = p.omega_c();
  const double g = p.g();
  const double r_beta = beta - kSqrt2 * (alpha * wc - g) * std::exp(0.5 * alpha * alpha) / (alpha * wa);
  const double r_g = g - (alpha * alpha * beta * wc -
                          (2.0 - beta * beta) * (wa / kSqrt2) * std::exp(-0.5 * alpha * alpha)) /
                             (2.0 * alpha * beta);
  return {r_beta, r_g};
}

VariationalSolution solve(const ModelParams& p) {
  VariationalSolution sol;
  if (p.g() == 0.0) {
    sol.alpha = 0.0;
    sol.beta = -kSqrt2;
    sol.energy = -p.omega_a();
    sol.norm_sq = 4.0;
    return sol;
  }

  auto branch_energy = [&](double a) {
    const BetaRoots r = beta_stationary(a, p);
    return std::min(energy_expectation(a, r.minus, p), energy_expectation(a, r.plus, p));
  };

  // Coarse scan for the global minimum, then polish on the sign change of
  // dE/dalpha inside the neighbouring grid cells.
  const double a_max = p.g() / p.omega_c();
  std::vector<double> grid(kScanPoints + 1);
  int best = 0;
  double best_e = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kScanPoints; ++i) {
    grid[i] = a_max * static_cast<double>(i) / kScanPoints;
    const double e = branch_energy(grid[i]);
    if (e < best_e) {
      best_e = e;
      best = i;
    }
  }
  auto h = [&](double a) { return alpha_stationarity(a, p); };
  double lo = grid[std::max(best - 1, 0)];
  double hi = grid[std::min(best + 1, kScanPoints)];
  if (!(h(lo) <= 0.0 && h(hi) >= 0.0)) {
    // dE/dalpha < 0 at alpha = 0 and > 0 at g / wc, so this always brackets.
    lo = 0.0;
    hi = a_max;
  }
  const double alpha = (h(lo) == 0.0) ? lo : (h(hi) == 0.0 ? hi : toms748_root(h, lo, hi));

  const BetaRoots roots = beta_stationary(alpha, p);
  const double e_minus = energy_expectation(alpha, roots.minus, p);
  const double e_plus = energy_expectation(alpha, roots.plus, p);
  sol.alpha = alpha;
  sol.beta = e_minus <= e_plus ? roots.minus : roots.plus;
  sol.energy = std::min(e_minus, e_plus);
  sol.norm_sq = 2.0 + sol.beta * sol.beta;

  const auto [r_beta, r_g] = stationarity_residuals(sol.alpha, sol.beta, p);
  sol.residual_beta_form = r_beta;
  sol.residual_g_form = r_g;
  if (!(std::abs(r_beta) < kResidualLimit && std::abs(r_g) < kResidualLimit)) {
    throw std::runtime_error("variational::solve: stationarity residuals too large (" +
                             std::to_string(r_beta) + ", " + std::to_string(r_g) +
                             ") at g = " + std::to_string(p.g()));
  }
  sol.spurious_stationary_point = find_spurious(p);
  return sol;
}

SmallCouplingEstimate small_g_approx(const ModelParams& p) {
  const double wa = p.omega_a();
  const double wc = p.omega_c();
  const double g = p.g();
  const double sum = wa + wc;
  return {g / sum, -kSqrt2 + (2.0 * wa + wc) / (kSqrt2 * wa * sum * sum) * g * g};
}

TrialState trial_state(double alpha, double beta, FockTruncation trunc) {
  const CoherentState plus = coherent_state_vector(alpha, trunc);
  const CoherentState minus = coherent_state_vector(-alpha, trunc);
  const auto nf = static_cast<Eigen::Index>(trunc.fock_dim());

  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(trunc.product_dim()));
  for (Eigen::Index n = 0; n < nf; ++n) {
    v(n * 3 + static_cast<Eigen::Index>(atom_index(-1))) = plus.amplitudes(n);
    v(n * 3 + static_cast<Eigen::Index>(atom_index(+1))) = minus.amplitudes(n);
  }
  v(static_cast<Eigen::Index>(atom_index(0))) = beta;
  return {JointState(std::move(v), trunc.n_max),
          std::max(plus.truncation_deficit, minus.truncation_deficit)};
}

}  // namespace rabi2q::variational
