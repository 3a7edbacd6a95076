#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <ostream>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <json.hpp>

#include "rabi2q/entangle.hpp"
#include "rabi2q/model.hpp"
#include "rabi2q/transform.hpp"
#include "rabi2q/variational.hpp"

namespace rabi2q::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Fock truncation for materialized coherent states: generous for every
// displacement reachable at g / omega_a <= 4.
FockTruncation trial_truncation(std::size_t n_max_used) { return {std::max<std::size_t>(n_max_used, 64)}; }

json real_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// Flat key/value record written either as a CSV header + row or a JSON object.
using Record = std::vector<std::pair<std::string, json>>;

void write_record(const Record& rec, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    json obj = json::object();
    for (const auto& [k, v] : rec) obj[k] = v;
    out << obj.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << rec[i].first;
  out << '\n';
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const json& v = rec[i].second;
    out << (i ? "," : "");
    if (v.is_number_float()) out << format_real(v.get<double>());
    else if (v.is_null()) out << "nan";
    else if (v.is_string()) out << v.get<std::string>();
    else out << v.dump();
  }
  out << '\n';
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 10);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

PointReport evaluate_point(double omega_c, double g, const GroundStateOptions& opts) {
  const ModelParams p = ModelParams::in_atomic_units(omega_c, g);
  const GroundStateResult gs = exact::ground_state(p, opts);
  const transform::TransformSolution ts = transform::solve_chi(p);
  const variational::VariationalSolution vs = variational::solve(p);

  PointReport r;
  r.omega_c = omega_c;
  r.g = g;
  r.energy_exact = gs.energy;
  r.energy_variational = vs.energy;
  r.eps_minus = ts.eps_minus;
  r.delta_e = ts.delta_e;
  r.energy_corrected = ts.corrected_energy();
  r.alpha = vs.alpha;
  r.beta = vs.beta;
  r.chi = ts.chi;
  const auto trial = variational::trial_state(vs, trial_truncation(gs.n_max_used));
  r.fidelity = exact::fidelity(trial.state, gs.state);
  r.negativity_exact = entangle::negativity_numerical(entangle::reduced_density_from_joint(gs.state)).value;
  r.negativity_approx = entangle::negativity_closed_form(vs.alpha, vs.beta);
  r.negativity_small_g = entangle::negativity_small_g(p);
  r.n_max_used = gs.n_max_used;
  r.residual = gs.residual;
  r.spectral_gap = gs.spectral_gap;
  r.chi_in_expansion_regime = ts.within_expansion_regime();
  return r;
}

void write_point(const PointReport& r, Format fmt, std::ostream& out) {
  write_record({{"omega_c", r.omega_c},
                {"g", r.g},
                {"energy_exact", r.energy_exact},
                {"energy_variational", r.energy_variational},
                {"eps_minus", r.eps_minus},
                {"delta_e", r.delta_e},
                {"energy_corrected", r.energy_corrected},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"chi", r.chi},
                {"fidelity", r.fidelity},
                {"negativity_exact", r.negativity_exact},
                {"negativity_approx", r.negativity_approx},
                {"negativity_small_g", r.negativity_small_g},
                {"n_max_used", r.n_max_used},
                {"residual", r.residual},
                {"spectral_gap", r.spectral_gap},
                {"chi_in_expansion_regime", r.chi_in_expansion_regime}},
               fmt, out);
}

void write_variational(double omega_c, double g, Format fmt, std::ostream& out) {
  const ModelParams p = ModelParams::in_atomic_units(omega_c, g);
  const auto vs = variational::solve(p);
  const auto est = variational::small_g_approx(p);
  const auto spurious = vs.spurious_stationary_point;
  write_record({{"omega_c", omega_c},
                {"g", g},
                {"alpha", vs.alpha},
                {"beta", vs.beta},
                {"energy_variational", vs.energy},
                {"norm_sq", vs.norm_sq},
                {"residual_beta_form", vs.residual_beta_form},
                {"residual_g_form", vs.residual_g_form},
                {"alpha_small_g", est.alpha},
                {"beta_small_g", est.beta},
                {"spurious_alpha", real_or_null(spurious ? spurious->first : kNaN)},
                {"spurious_beta", real_or_null(spurious ? spurious->second : kNaN)}},
               fmt, out);
}

void write_transform(double omega_c, double g, Format fmt, std::ostream& out) {
  const ModelParams p = ModelParams::in_atomic_units(omega_c, g);
  const auto ts = transform::solve_chi(p);
  const double oracle = transform::h2_perturbation_oracle(ts, p, FockTruncation{8});
  write_record({{"omega_c", omega_c},
                {"g", g},
                {"chi", ts.chi},
                {"eta", ts.eta},
                {"mu", ts.mu},
                {"lambda_minus", ts.lambda_minus},
                {"lambda_plus", ts.lambda_plus},
                {"n_minus_sq", ts.n_minus_sq},
                {"n_plus_sq", ts.n_plus_sq},
                {"eps_minus", ts.eps_minus},
                {"eps_zero", ts.eps_zero},
                {"eps_plus", ts.eps_plus},
                {"delta_e", ts.delta_e},
                {"delta_e_sum_over_states", oracle},
                {"energy_corrected", ts.corrected_energy()},
                {"chi_in_expansion_regime", ts.within_expansion_regime()}},
               fmt, out);
}

void write_negativity(double omega_c, double g, const GroundStateOptions& opts, Format fmt,
                      std::ostream& out) {
  const ModelParams p = ModelParams::in_atomic_units(omega_c, g);
  const auto gs = exact::ground_state(p, opts);
  const auto vs = variational::solve(p);
  const auto numeric = entangle::negativity_numerical(entangle::reduced_density_from_joint(gs.state));
  write_record({{"omega_c", omega_c},
                {"g", g},
                {"negativity_exact", numeric.value},
                {"negativity_approx", entangle::negativity_closed_form(vs.alpha, vs.beta)},
                {"negativity_small_g", entangle::negativity_small_g(p)},
                {"concurrence_approx", entangle::concurrence_approx(vs.alpha, vs.beta)},
                {"negative_eigenvalue_count", numeric.negative_eigenvalues.size()}},
               fmt, out);
}

// ---------------------------------------------------------------------------

bool TableRow::matches(double tol) const {
  return std::abs(energy_exact - ref_exact) <= tol && std::abs(eps_minus - ref_eps_minus) <= tol &&
         std::abs(energy_corrected - ref_corrected) <= tol;
}

bool TableResult::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [&](const TableRow& r) { return r.matches(tol); });
}

std::size_t TableResult::cells_matching() const {
  std::size_t n = 0;
  for (const auto& r : rows) {
    n += std::abs(r.energy_exact - r.ref_exact) <= tol;
    n += std::abs(r.eps_minus - r.ref_eps_minus) <= tol;
    n += std::abs(r.energy_corrected - r.ref_corrected) <= tol;
  }
  return n;
}

const std::vector<TableRow>& table1_reference() {
  static const std::vector<TableRow> rows = [] {
    const double ref[6][4] = {{0.2, -1.01015, -1.01013, -1.01015},
                              {0.4, -1.04256, -1.04210, -1.04255},
                              {0.6, -1.10404, -1.10137, -1.10403},
                              {0.8, -1.20984, -1.19965, -1.20988},
                              {1.0, -1.38986, -1.36052, -1.39094},
                              {1.2, -1.68602, -1.62699, -1.68995}};
    std::vector<TableRow> out;
    for (const auto& r : ref) {
      TableRow row;
      row.g = r[0];
      row.ref_exact = r[1];
      row.ref_eps_minus = r[2];
      row.ref_corrected = r[3];
      out.push_back(row);
    }
    return out;
  }();
  return rows;
}

TableResult run_table1(double tol, const GroundStateOptions& opts) {
  TableResult t;
  t.tol = tol;
  for (TableRow row : table1_reference()) {
    const ModelParams p = ModelParams::in_atomic_units(1.0, row.g);
    row.energy_exact = exact::ground_state(p, opts).energy;
    const auto ts = transform::solve_chi(p);
    row.eps_minus = ts.eps_minus;
    row.energy_corrected = ts.corrected_energy();
    t.rows.push_back(row);
  }
  return t;
}

void write_table1(const TableResult& t, Format fmt, std::ostream& out) {
  auto five = [](double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 5);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
  };
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : t.rows) {
      arr.push_back({{"g", r.g},
                     {"energy_exact", r.energy_exact},
                     {"eps_minus", r.eps_minus},
                     {"energy_corrected", r.energy_corrected},
                     {"ref_exact", r.ref_exact},
                     {"ref_eps_minus", r.ref_eps_minus},
                     {"ref_corrected", r.ref_corrected},
                     {"match", r.matches(t.tol)}});
    }
    out << json{{"tol", t.tol}, {"rows", arr}, {"all_match", t.all_match()}}.dump(2) << '\n';
    return;
  }
  out << "g,energy_exact,eps_minus,energy_corrected,match\n";
  for (const auto& r : t.rows) {
    out << five(r.g) << ',' << five(r.energy_exact) << ',' << five(r.eps_minus) << ','
        << five(r.energy_corrected) << ',' << (r.matches(t.tol) ? "ok" : "MISMATCH") << '\n';
  }
}

// ---------------------------------------------------------------------------

void SweepSpec::validate() const {
  if (!(g_min <= g_max)) throw std::invalid_argument("sweep: g_min must not exceed g_max");
  if (steps == 0) throw std::invalid_argument("sweep: steps must be >= 1");
  if (g_min < 0.0) throw std::invalid_argument("sweep: g_min must be non-negative");
  if (!(omega_c_over_a > 0.0)) throw std::invalid_argument("sweep: omega_c must be positive");
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    g[i] = steps == 1 ? g_min
                      : g_min + (g_max - g_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return g;
}

namespace {

const char* method_name(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Variational: return "variational";
    case Method::Transform: return "transform";
    case Method::Corrected: return "corrected";
  }
  return "";
}

const char* output_name(Output o) {
  switch (o) {
    case Output::Energy: return "energy";
    case Output::Alpha: return "alpha";
    case Output::Beta: return "beta";
    case Output::Fidelity: return "fidelity";
    case Output::NegativityExact: return "negativity_exact";
    case Output::NegativityApprox: return "negativity_approx";
  }
  return "";
}

template <typename E>
bool contains(const std::vector<E>& v, E x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

constexpr Method kAllMethods[] = {Method::Exact, Method::Variational, Method::Transform,
                                  Method::Corrected};
constexpr Output kAllOutputs[] = {Output::Energy,   Output::Alpha,           Output::Beta,
                                  Output::Fidelity, Output::NegativityExact, Output::NegativityApprox};

SweepRow sweep_row(const SweepSpec& spec, double g, const GroundStateOptions& opts) {
  SweepRow row;
  row.g = g;
  const std::size_t ncols = sweep_columns(spec).size();
  row.values.assign(ncols, kNaN);
  try {
    const ModelParams p = ModelParams::in_atomic_units(spec.omega_c_over_a, g);
    const auto& out = spec.outputs;
    const bool energy = contains(out, Output::Energy);
    const bool need_exact = (energy && contains(spec.methods, Method::Exact)) ||
                            contains(out, Output::Fidelity) || contains(out, Output::NegativityExact);
    const bool need_transform = energy && (contains(spec.methods, Method::Transform) ||
                                           contains(spec.methods, Method::Corrected));

    std::optional<GroundStateResult> gs;
    if (need_exact) {
      gs = exact::ground_state(p, opts);
      row.n_max_used = gs->n_max_used;
      row.residual = gs->residual;
    }
    const auto vs = variational::solve(p);
    std::optional<transform::TransformSolution> ts;
    if (need_transform) ts = transform::solve_chi(p);

    std::size_t col = 0;
    for (Output o : kAllOutputs) {
      if (!contains(out, o)) continue;
      if (o == Output::Energy) {
        for (Method m : kAllMethods) {
          if (!contains(spec.methods, m)) continue;
          switch (m) {
            case Method::Exact: row.values[col] = gs->energy; break;
            case Method::Variational: row.values[col] = vs.energy; break;
            case Method::Transform: row.values[col] = ts->eps_minus; break;
            case Method::Corrected: row.values[col] = ts->corrected_energy(); break;
          }
          ++col;
        }
        continue;
      }
      switch (o) {
        case Output::Alpha: row.values[col] = vs.alpha; break;
        case Output::Beta: row.values[col] = vs.beta; break;
        case Output::Fidelity: {
          const auto trial = variational::trial_state(vs, trial_truncation(gs->n_max_used));
          row.values[col] = exact::fidelity(trial.state, gs->state);
          break;
        }
        case Output::NegativityExact:
          row.values[col] =
              entangle::negativity_numerical(entangle::reduced_density_from_joint(gs->state)).value;
          break;
        case Output::NegativityApprox:
          row.values[col] = entangle::negativity_closed_form(vs.alpha, vs.beta);
          break;
        case Output::Energy: break;
      }
      ++col;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += (c == '\n') ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (Output o : kAllOutputs) {
    if (!contains(spec.outputs, o)) continue;
    if (o == Output::Energy) {
      for (Method m : kAllMethods)
        if (contains(spec.methods, m)) cols.push_back(std::string("energy_") + method_name(m));
    } else {
      cols.emplace_back(output_name(o));
    }
  }
  return cols;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const GroundStateOptions& opts,
                                std::size_t parallel) {
  spec.validate();
  const std::vector<double> grid = spec.grid();
  std::vector<SweepRow> rows(grid.size());
  const std::size_t workers = std::clamp<std::size_t>(parallel, 1, grid.size());

  // Static striding keeps each row's computation independent of scheduling.
  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < grid.size(); i += workers) rows[i] = sweep_row(spec, grid[i], opts);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, work, w));
    for (auto& t : tasks) t.get();
  }
  return rows;
}

void write_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows, Format fmt,
                 std::ostream& out) {
  const std::vector<std::string> cols = sweep_columns(spec);
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj = json::object();
      obj["g"] = r.g;
      for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = real_or_null(r.values[i]);
      obj["n_max_used"] = r.n_max_used;
      obj["residual"] = r.residual;
      obj["error"] = r.error;
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "g";
  for (const auto& c : cols) out << ',' << c;
  out << ",n_max_used,residual,error\n";
  for (const auto& r : rows) {
    out << format_real(r.g);
    for (double v : r.values) out << ',' << format_real(v);
    out << ',' << r.n_max_used << ',' << format_real(r.residual) << ',' << csv_escape(r.error) << '\n';
  }
}

Method parse_method(const std::string& s) {
  for (Method m : kAllMethods)
    if (s == method_name(m)) return m;
  throw std::invalid_argument("unknown method '" + s + "'");
}

Output parse_output(const std::string& s) {
  for (Output o : kAllOutputs)
    if (s == output_name(o)) return o;
  throw std::invalid_argument("unknown output '" + s + "'");
}

// ---------------------------------------------------------------------------

ZeroCrossing find_negativity_zero(double omega_c, double lo, double hi, double g_tol,
                                  double zero_threshold, const GroundStateOptions& opts) {
  if (!(lo < hi) || !(g_tol > 0.0)) throw std::invalid_argument("find-zero: need lo < hi and tol > 0");
  ZeroCrossing z;
  auto neg = [&](double g) {
    ++z.evaluations;
    return entangle::exact_negativity(ModelParams::in_atomic_units(omega_c, g), opts);
  };
  z.lo_negativity = neg(lo);
  z.hi_negativity = neg(hi);
  if (!(z.lo_negativity > zero_threshold) || z.hi_negativity > zero_threshold) {
    throw NoSignChange("find-zero: exact negativity does not fall to " + format_real(zero_threshold) +
                       " inside [" + format_real(lo) + ", " + format_real(hi) + "] (N(lo) = " +
                       format_real(z.lo_negativity) + ", N(hi) = " + format_real(z.hi_negativity) + ")");
  }
  while (hi - lo > g_tol) {
    const double mid = 0.5 * (lo + hi);
    if (neg(mid) > zero_threshold) lo = mid;
    else hi = mid;
  }
  z.g = 0.5 * (lo + hi);
  return z;
}

NegativityPeak locate_negativity_maximum(double omega_c, double lo, double hi,
                                         const GroundStateOptions& opts) {
  auto minus_neg = [&](double g) {
    return -entangle::exact_negativity(ModelParams::in_atomic_units(omega_c, g), opts);
  };
  std::uintmax_t iters = 100;
  const auto [g, v] = boost::math::tools::brent_find_minima(minus_neg, lo, hi, 24, iters);
  return {g, -v};
}

}  // namespace rabi2q::cli
