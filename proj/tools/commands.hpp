// commands.hpp - Subcommand logic behind the rabi2q CLI, usable without argv.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rabi2q/exact.hpp"

namespace rabi2q::cli {

enum class Format { Csv, Json };

enum ExitCode : int {
  kSuccess = 0,
  kComputationalFailure = 1,
  kReferenceMismatch = 2,
  kBadFlags = 3,
};

/// Locale-free shortest-form with 10 significant digits; "nan" for NaN.
std::string format_real(double x);

/// Everything computed for one (omega_c / omega_a, g / omega_a) point.
struct PointReport {
  double omega_c = 1.0;
  double g = 0.0;
  double energy_exact = 0.0;
  double energy_variational = 0.0;
  double eps_minus = 0.0;
  double delta_e = 0.0;
  double energy_corrected = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double chi = 0.0;
  double fidelity = 0.0;
  double negativity_exact = 0.0;
  double negativity_approx = 0.0;
  double negativity_small_g = 0.0;
  std::size_t n_max_used = 0;
  double residual = 0.0;
  double spectral_gap = 0.0;
  bool chi_in_expansion_regime = true;
};

PointReport evaluate_point(double omega_c, double g, const GroundStateOptions& opts);

/// One row per subcommand in CSV (header + values) or a JSON object.
void write_point(const PointReport& r, Format fmt, std::ostream& out);
void write_variational(double omega_c, double g, Format fmt, std::ostream& out);
void write_transform(double omega_c, double g, Format fmt, std::ostream& out);
void write_negativity(double omega_c, double g, const GroundStateOptions& opts, Format fmt,
                      std::ostream& out);

// ---------------------------------------------------------------------------
// Table of resonant ground-state energies.

struct TableRow {
  double g = 0.0;
  double energy_exact = 0.0;
  double eps_minus = 0.0;
  double energy_corrected = 0.0;
  double ref_exact = 0.0;
  double ref_eps_minus = 0.0;
  double ref_corrected = 0.0;

  bool matches(double tol) const;
};

struct TableResult {
  std::vector<TableRow> rows;
  double tol = 2e-5;
  bool all_match() const;
  std::size_t cells_matching() const;
};

/// Reference rows (5 decimals) at omega_c = omega_a, g / omega_a = 0.2 ... 1.2.
const std::vector<TableRow>& table1_reference();

TableResult run_table1(double tol, const GroundStateOptions& opts);
void write_table1(const TableResult& t, Format fmt, std::ostream& out);

// ---------------------------------------------------------------------------
// Sweeps.

enum class Method { Exact, Variational, Transform, Corrected };
enum class Output { Energy, Alpha, Beta, Fidelity, NegativityExact, NegativityApprox };

struct SweepSpec {
  double g_min = 0.0;
  double g_max = 1.0;
  std::size_t steps = 11;
  double omega_c_over_a = 1.0;
  std::vector<Method> methods{Method::Exact, Method::Variational, Method::Transform,
                              Method::Corrected};
  std::vector<Output> outputs{Output::Energy, Output::Alpha, Output::Beta, Output::Fidelity,
                              Output::NegativityExact, Output::NegativityApprox};

  /// Throws std::invalid_argument on g_min > g_max or steps == 0.
  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double g = 0.0;
  std::vector<double> values;  // one per column() after "g"
  std::size_t n_max_used = 0;
  double residual = 0.0;
  std::string error;           // empty on success
};

/// Column names after "g", in canonical method/output order, followed by the
/// diagnostics columns written separately.
std::vector<std::string> sweep_columns(const SweepSpec& spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const GroundStateOptions& opts,
                                std::size_t parallel = 1);
void write_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows, Format fmt,
                 std::ostream& out);

Method parse_method(const std::string& s);
Output parse_output(const std::string& s);

// ---------------------------------------------------------------------------
// Negativity extremum and disappearance.

class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ZeroCrossing {
  double g = 0.0;
  double lo_negativity = 0.0;  // at the bracket ends
  double hi_negativity = 0.0;
  std::size_t evaluations = 0;
};

/// Bisects g in [lo, hi] for the point where the exact-state negativity
/// first falls to <= zero_threshold. Throws NoSignChange if it is above the
/// threshold at hi or already below it at lo.
ZeroCrossing find_negativity_zero(double omega_c, double lo, double hi, double g_tol,
                                  double zero_threshold, const GroundStateOptions& opts);

struct NegativityPeak {
  double g = 0.0;
  double value = 0.0;
};

/// Brent maximization of the exact-state negativity over g in [lo, hi].
NegativityPeak locate_negativity_maximum(double omega_c, double lo, double hi,
                                         const GroundStateOptions& opts);

}  // namespace rabi2q::cli
