// rabi2q - ground state and entanglement of the two-qubit Rabi model.
//
// All quantities are in units of omega_a (omega_a = 1).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace rabi2q;
using namespace rabi2q::cli;

struct Flags {
  double omega_c = 1.0;
  double g = 0.0;
  double g_min = 0.0;
  double g_max = 1.0;
  std::size_t steps = 11;
  std::size_t nmax_start = 16;
  std::size_t nmax_cap = 4096;
  double tol = 1e-10;
  std::string format = "csv";
  std::string output;
  std::vector<std::string> methods{"exact", "variational", "transform", "corrected"};
  std::vector<std::string> outputs{"energy", "alpha", "beta", "fidelity", "negativity_exact",
                                   "negativity_approx"};
  std::size_t parallel = 1;
  double table_tol = 2e-5;
  double bracket_lo = 1.5;
  double bracket_hi = 3.5;
  double g_tol = 1e-3;
  double zero_threshold = 1e-10;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit Rabi model: exact, variational and transformation ground states"};
  app.set_config("--config", "", "Flat key = value file mirroring the flag names");
  app.require_subcommand(1);

  Flags f;
  app.add_option("--omega-c", f.omega_c, "omega_c / omega_a")->capture_default_str();
  app.add_option("--g", f.g, "Coupling g / omega_a")->check(CLI::NonNegativeNumber);
  app.add_option("--g-min", f.g_min, "Sweep start")->check(CLI::NonNegativeNumber);
  app.add_option("--g-max", f.g_max, "Sweep end")->check(CLI::NonNegativeNumber);
  app.add_option("--steps", f.steps, "Number of sweep points")->check(CLI::PositiveNumber);
  app.add_option("--nmax-start", f.nmax_start, "Initial Fock truncation")->capture_default_str();
  app.add_option("--nmax-cap", f.nmax_cap, "Give up past this truncation")->capture_default_str();
  app.add_option("--tol", f.tol, "Ground-energy convergence tolerance")->capture_default_str();
  app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", f.output, "Output path (default stdout)");
  app.add_option("--methods", f.methods, "exact,variational,transform,corrected")->delimiter(',');
  app.add_option("--outputs", f.outputs,
                 "energy,alpha,beta,fidelity,negativity_exact,negativity_approx")
      ->delimiter(',');
  app.add_option("--parallel", f.parallel, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--table-tol", f.table_tol, "table1 comparison tolerance")->capture_default_str();
  app.add_option("--bracket-lo", f.bracket_lo, "find-zero bracket start")->capture_default_str();
  app.add_option("--bracket-hi", f.bracket_hi, "find-zero bracket end")->capture_default_str();
  app.add_option("--g-tol", f.g_tol, "find-zero bisection tolerance")->capture_default_str();
  app.add_option("--zero-threshold", f.zero_threshold,
                 "Negativity at or below this counts as zero")->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"ground", "All methods at one point"},
      {"variational", "Coherent-state variational solution"},
      {"transform", "Transformation method and second-order correction"},
      {"table1", "Resonant energy table against reference values"},
      {"sweep", "Scan g at fixed omega_c"},
      {"negativity", "Qubit-qubit negativity at one point"},
      {"find-zero", "Coupling where the exact negativity vanishes"}};
  std::vector<CLI::App*> cmds;
  for (const auto& [name, desc] : subs) cmds.push_back(app.add_subcommand(name, desc)->fallthrough());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kBadFlags;
  }

  std::ofstream file;
  if (!f.output.empty()) {
    file.open(f.output);
    if (!file) {
      std::cerr << "cannot open " << f.output << '\n';
      return kBadFlags;
    }
  }
  std::ostream& out = f.output.empty() ? std::cout : file;
  const Format fmt = f.format == "json" ? Format::Json : Format::Csv;
  GroundStateOptions opts;
  opts.tol = f.tol;
  opts.n_max_start = f.nmax_start;
  opts.n_max_cap = f.nmax_cap;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "ground") {
      write_point(evaluate_point(f.omega_c, f.g, opts), fmt, out);
    } else if (cmd == "variational") {
      write_variational(f.omega_c, f.g, fmt, out);
    } else if (cmd == "transform") {
      write_transform(f.omega_c, f.g, fmt, out);
    } else if (cmd == "negativity") {
      write_negativity(f.omega_c, f.g, opts, fmt, out);
    } else if (cmd == "table1") {
      const TableResult t = run_table1(f.table_tol, opts);
      write_table1(t, fmt, out);
      if (!t.all_match()) {
        for (const auto& r : t.rows) {
          if (r.matches(t.tol)) continue;
          std::cerr << "g=" << r.g << ": got (" << format_real(r.energy_exact) << ", "
                    << format_real(r.eps_minus) << ", " << format_real(r.energy_corrected)
                    << "), expected (" << r.ref_exact << ", " << r.ref_eps_minus << ", "
                    << r.ref_corrected << ")\n";
        }
        return kReferenceMismatch;
      }
    } else if (cmd == "sweep") {
      SweepSpec spec;
      spec.g_min = f.g_min;
      spec.g_max = f.g_max;
      spec.steps = f.steps;
      spec.omega_c_over_a = f.omega_c;
      spec.methods.clear();
      for (const auto& m : f.methods) spec.methods.push_back(parse_method(m));
      spec.outputs.clear();
      for (const auto& o : f.outputs) spec.outputs.push_back(parse_output(o));
      try {
        spec.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kBadFlags;
      }
      write_sweep(spec, run_sweep(spec, opts, f.parallel), fmt, out);
    } else if (cmd == "find-zero") {
      const NegativityPeak peak = locate_negativity_maximum(f.omega_c, 0.3, f.bracket_lo, opts);
      const ZeroCrossing z =
          find_negativity_zero(f.omega_c, f.bracket_lo, f.bracket_hi, f.g_tol, f.zero_threshold, opts);
      if (fmt == Format::Json) {
        out << "{\n  \"omega_c\": " << format_real(f.omega_c) << ",\n  \"g_zero\": " << format_real(z.g)
            << ",\n  \"g_peak\": " << format_real(peak.g) << ",\n  \"negativity_peak\": "
            << format_real(peak.value) << "\n}\n";
      } else {
        out << "omega_c,g_zero,g_peak,negativity_peak\n"
            << format_real(f.omega_c) << ',' << format_real(z.g) << ',' << format_real(peak.g) << ','
            << format_real(peak.value) << '\n';
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputationalFailure;
  }
  return kSuccess;
}
