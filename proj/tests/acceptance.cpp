// acceptance - one PASS/FAIL line per acceptance criterion.
//
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "rabi2q/entangle.hpp"
#include "rabi2q/exact.hpp"
#include "rabi2q/transform.hpp"
#include "rabi2q/variational.hpp"

using namespace rabi2q;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %s %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel_err(double approx, double exact) { return std::abs(approx - exact) / std::abs(exact); }

// Tracks every exact solve so criterion 8 can check the truncation ladder and
// the variational upper bound over all points visited.
struct ExactLog {
  double worst_gap = 0.0;
  double worst_bound_violation = -1e300;  // max of E_g - E_v
  int solves = 0;

  GroundStateResult solve(const ModelParams& p) {
    GroundStateResult r = exact::ground_state(p);
    worst_gap = std::max(worst_gap, r.convergence_gap);
    worst_bound_violation =
        std::max(worst_bound_violation, r.energy - variational::solve(p).energy);
    ++solves;
    return r;
  }
} exact_log;

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const cli::TableResult t = cli::run_table1(2e-5, {});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double worst = 0.0;
  for (const auto& r : t.rows) {
    worst = std::max({worst, std::abs(r.energy_exact - r.ref_exact), std::abs(r.eps_minus - r.ref_eps_minus),
                      std::abs(r.energy_corrected - r.ref_corrected)});
    exact_log.solve(ModelParams(1.0, 1.0, r.g));
  }
  report("1", t.cells_matching() == 18 && secs < 10.0,
         "resonant energy table, 18 cells within 2e-5, under 10 s",
         std::to_string(t.cells_matching()) + "/18 cells, " + fmt("max dev %.2e, %.2f s", worst, secs));
}

void criterion2() {
  const ModelParams p(1.0, 1.0, 0.5);
  const double eg = exact_log.solve(p).energy;
  const double ev = variational::solve(p).energy;
  const double ec = transform::solve_chi(p).corrected_energy();
  const double e1 = rel_err(ev, eg);
  const double e2 = rel_err(ec, eg);
  report("2a", e1 >= 5e-4 && e1 <= 2e-3, "variational relative error at g = 0.5 in [0.05%, 0.2%]",
         fmt("%.4f%%", 100 * e1));
  report("2b", e2 < 2e-5, "corrected relative error at g = 0.5 below 0.002%", fmt("%.6f%%", 100 * e2));
}

void criterion3() {
  double worst = 1.0;
  for (double g : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const ModelParams p(1.0, 1.0, g);
    const GroundStateResult r = exact_log.solve(p);
    const auto t = variational::trial_state(variational::solve(p), {r.n_max_used});
    worst = std::min(worst, exact::fidelity(t.state, r.state));
  }
  report("3", worst > 0.999, "fidelity above 0.999 for g = 0.1 ... 0.5", fmt("min %.6f", worst));
}

void criterion4() {
  double worst = 0.0;
  double at = 0.0;
  for (int k = 1; k <= 16; ++k) {
    const double g = 0.05 * k;
    const ModelParams p(1.0, 1.2, g);
    const double e = rel_err(variational::solve(p).energy, exact_log.solve(p).energy);
    if (e > worst) {
      worst = e;
      at = g;
    }
  }
  report("4", worst < 5e-3, "omega_c = 1.2: variational relative error below 0.5% for g <= 0.8",
         fmt("max %.4f%% at g = %.2f", 100 * worst, at));
}

void criterion5() {
  const double g = 0.02;
  const double ratio = entangle::exact_negativity(ModelParams(1.0, 1.0, g)) / (g * g);
  const double dev = std::abs(ratio * 16.0 - 1.0);
  report("5", dev < 0.01, "exact negativity / g^2 at g = 0.02 within 1% of 1/16",
         fmt("ratio %.6f, deviation %.3f%%", ratio, 100 * dev));
}

void criterion6() {
  // Zero means numerically zero: the default find-zero threshold.
  const double zero = 1e-10;
  try {
    const cli::ZeroCrossing z = cli::find_negativity_zero(1.0, 1.5, 3.5, 1e-3, zero, {});
    bool stays = true;
    for (double g = z.g + 0.05; g <= 3.5; g += 0.05)
      stays = stays && entangle::exact_negativity(ModelParams(1.0, 1.0, g)) <= zero;
    report("6a", std::abs(z.g - 2.6) <= 0.1 && stays,
           "exact negativity vanishes at g = 2.6 +- 0.1 and stays zero",
           fmt("crossing at %.4f", z.g) + (stays ? "" : ", nonzero beyond"));
  } catch (const cli::NoSignChange&) {
    const double n26 = entangle::exact_negativity(ModelParams(1.0, 1.0, 2.6));
    const double n35 = entangle::exact_negativity(ModelParams(1.0, 1.0, 3.5));
    report("6a", false, "exact negativity vanishes at g = 2.6 +- 0.1 and stays zero",
           fmt("no crossing in [1.5, 3.5]: N(2.6) = %.3e, N(3.5) = %.3e", n26, n35));
  }
  const cli::NegativityPeak peak = cli::locate_negativity_maximum(1.0, 0.3, 1.5, {});
  report("6b", std::abs(peak.g - 1.0) <= 0.15, "negativity maximum at g = 1.0 +- 0.15",
         fmt("peak at %.4f, N = %.5f", peak.g, peak.value));
}

void criterion7() {
  double worst = 0.0;
  for (double wc : {0.8, 1.0, 1.2}) {
    for (int k = 1; k <= 20; ++k) {
      const ModelParams p(1.0, wc, 0.06 * k);
      const variational::VariationalSolution v = variational::solve(p);
      const transform::TransformSolution t = transform::solve_chi(p);
      worst = std::max({worst, std::abs(t.chi - v.alpha), std::abs(t.lambda_minus - v.beta),
                        std::abs(t.eps_minus - v.energy)});
    }
  }
  report("7", worst < 1e-9, "transform and variational solutions coincide on a 20x3 grid",
         fmt("max dev %.2e", worst));
}

void criterion8() {
  oracle::Sampler rng(8);

  double neg_dev = 0.0;
  for (int tested = 0; tested < 100;) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.5, 1.5);
    if (2.0 * std::exp(-2 * a * a) <= b * b) continue;  // closed form assumes an entangled state
    const double numerical =
        entangle::negativity_numerical(entangle::reduced_density_variational(a, b)).value;
    neg_dev = std::max(neg_dev, std::abs(numerical - entangle::negativity_closed_form(a, b)));
    ++tested;
  }
  report("8a", neg_dev < 1e-12, "closed-form negativity vs numerical partial transpose, 100 points",
         fmt("max dev %.2e", neg_dev));

  double pt_dev = 0.0;
  for (double g : {0.2, 0.4, 0.6, 0.8, 1.0, 1.2}) {
    const ModelParams p(1.0, 1.0, g);
    const transform::TransformSolution s = transform::solve_chi(p);
    pt_dev = std::max(pt_dev, std::abs(transform::h2_perturbation_oracle(s, p, {16}) - s.delta_e));
  }
  report("8b", pt_dev < 1e-9, "second-order correction vs sum over states, 6 points",
         fmt("max dev %.2e", pt_dev));

  const FockTruncation trunc{60};
  double ee_dev = 0.0;
  for (int k = 0; k < 40; ++k) {
    const ModelParams p(1.0, rng.uniform(0.5, 1.5), rng.uniform(0.0, 1.2));
    const Eigen::MatrixXd h = build_hamiltonian(p, trunc);
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-2.0, 2.0);
    const Eigen::VectorXd v = variational::trial_state(a, b, trunc).state.coefficients();
    ee_dev = std::max(ee_dev, std::abs(v.dot(h * v) - variational::energy_expectation(a, b, p)));
  }
  report("8c", ee_dev < 1e-9, "energy_expectation vs <trial|H|trial>, 40 random points",
         fmt("max dev %.2e", ee_dev));

  report("8d", exact_log.worst_gap < 1e-10, "final truncation doubling changes E_g by < 1e-10",
         fmt("max %.2e over ", exact_log.worst_gap) + std::to_string(exact_log.solves) + " solves");
  report("8e", exact_log.worst_bound_violation <= 0.0, "E_v >= E_g at every point tested",
         fmt("max E_g - E_v = %.3e", exact_log.worst_bound_violation));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
