#include "ckosc/oracle/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ckosc/errors.hpp"
#include "ckosc/observables.hpp"
#include "ckosc/oracle/crank_nicolson.hpp"
#include "ckosc/oracle/operators.hpp"
#include "ckosc/oracle/quadrature.hpp"

namespace ckosc::oracle {

using json = nlohmann::json;

namespace {

struct Context {
  const ValidationConfig& config;
  const Tolerances& tol;
};

using CheckFn = std::function<std::vector<ValidationEntry>(const ParamPoint&, const Context&)>;

ValidationEntry make_entry(std::string name, const ParamPoint& point, double measured, double expected,
                           double tolerance, bool pass, std::string note = {}) {
  return {std::move(name), point, measured, expected, tolerance, pass ? EntryStatus::Pass : EntryStatus::Fail,
          std::move(note)};
}

ValidationEntry deviation(std::string name, const ParamPoint& point, double measured, double expected,
                          double tolerance, bool relative = false) {
  const double scale = relative ? std::abs(expected) : 1.0;
  const bool pass = std::abs(measured - expected) <= tolerance * scale;
  return make_entry(std::move(name), point, measured, expected, tolerance, pass);
}

ValidationEntry recorded(std::string name, const ParamPoint& point, double measured, double expected,
                         std::string note) {
  ValidationEntry entry{std::move(name), point, measured, expected, 0.0, EntryStatus::Recorded, std::move(note)};
  return entry;
}

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

double relative_l2(std::span<const complex> a, std::span<const complex> b, double h) {
  std::vector<complex> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return l2_norm(diff, h) / l2_norm(b, h);
}

// --- checks -------------------------------------------------------------------------------------------------

std::vector<ValidationEntry> check_wronskian(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const ModeValue mode = mode_u_rphi(params, {p.r, p.phi}, p.t);
  const double dev = std::abs(wronskian(params, mode) - complex(0.0, 1.0));
  return {make_entry("wronskian", p, dev, 0.0, ctx.tol.wronskian, dev < ctx.tol.wronskian)};
}

std::vector<ValidationEntry> check_sigma0(const ParamPoint& p, const Context& ctx) {
  const auto forms = sigma0_forms(p.params());
  return {deviation("sigma0_forms", p, forms.from_angle, forms.from_ratio, ctx.tol.sigma0_forms, true)};
}

std::vector<ValidationEntry> check_gmus(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const auto record = uncertainty_product(params, 0, {}, p.t);
  return {deviation("gmus_constancy", p, record.product, record.bound, ctx.tol.gmus)};
}

std::vector<ValidationEntry> check_lower_bound(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const double period = kPi / params.omega();
  const double s0 = sigma0(params);
  double min_heisenberg = INFINITY;
  double min_generalized = INFINITY;
  double worst_r0 = 0.0;
  for (int n = 0; n <= 4; ++n) {
    for (double r : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      for (double phi : {0.0, kPi / 4.0, 1.0, kPi, 5.0}) {
        for (int k = 0; k < 32; ++k) {
          const double t = period * k / 32.0;
          const double product = uncertainty_product(params, n, {r, phi}, t).product;
          const double level = params.hbar() * (n + 0.5);
          min_heisenberg = std::min(min_heisenberg, product / level);
          min_generalized = std::min(min_generalized, product / (level * s0));
          if (r == 0.0) worst_r0 = std::max(worst_r0, std::abs(product / (level * s0) - 1.0));
        }
      }
    }
  }
  return {make_entry("lower_bound.heisenberg", p, min_heisenberg, 1.0, ctx.tol.lower_bound,
                     min_heisenberg >= 1.0 - ctx.tol.lower_bound,
                     "min of product / (hbar (n + 1/2)) over n <= 4 and the (r, phi, t) lattice"),
          make_entry("lower_bound.equality_at_r0", p, worst_r0, 0.0, ctx.tol.lower_bound,
                     worst_r0 <= ctx.tol.lower_bound, "max |product / (hbar sigma0 (n + 1/2)) - 1| at r = 0"),
          recorded("lower_bound.generalized", p, min_generalized, 1.0,
                   "min of product / (hbar sigma0 (n + 1/2)); values below 1 are squeezed states under the "
                   "generalized bound (not asserted)")};
}

std::vector<ValidationEntry> check_normalization(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const StateSpec spec = p.spec();
  const GridSpec grid = make_grid(params, spec, p.t, ctx.config.grid_points);
  const auto psi = sample_state(params, spec, p.t, grid.positions(), ctx.config.options);
  const double norm = inner_product(psi, psi, grid.dq).real();
  return {deviation("normalization", p, norm, 1.0, ctx.tol.normalization)};
}

std::vector<ValidationEntry> check_orthogonality(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const SqueezeParams squeeze{p.r, p.phi};
  const GridSpec grid = make_grid(params, StateSpec::number(5, squeeze), p.t, ctx.config.grid_points);
  const auto q = grid.positions();
  std::vector<std::vector<complex>> states;
  for (int n = 0; n <= 5; ++n) {
    states.push_back(sample_state(params, StateSpec::number(n, squeeze), p.t, q, ctx.config.options));
  }
  double worst = 0.0;
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const complex overlap = inner_product(states[m], states[n], grid.dq);
      worst = std::max(worst, std::abs(overlap - (m == n ? 1.0 : 0.0)));
    }
  }
  return {make_entry("orthogonality", p, worst, 0.0, ctx.tol.orthogonality, worst <= ctx.tol.orthogonality,
                     "max |<m|n> - delta_mn| for m, n <= 5")};
}

Moments state_moments(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const StateSpec spec = p.spec();
  const GridSpec grid = make_grid(params, spec, p.t, ctx.config.grid_points);
  const auto psi = sample_state(params, spec, p.t, grid.positions(), ctx.config.options);
  return moments(psi, grid, params, p.t);
}

std::vector<ValidationEntry> check_moments(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const Moments m = state_moments(p, ctx);
  const double quadrature = std::sqrt(m.var_q() * m.var_p()) / m.norm;
  const double closed = uncertainty_product(params, p.n, {p.r, p.phi}, p.t).product;
  auto entry = deviation("moments_vs_closed_form", p, quadrature, closed, ctx.tol.moments_relative, true);
  entry.note = m.warning;
  return {entry};
}

std::vector<ValidationEntry> check_hamiltonian(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const Moments m = state_moments(p, ctx);
  const SqueezeParams squeeze{p.r, p.phi};
  const double closed = p.qc ? coherent_hamiltonian_expectation(params, squeeze, {*p.qc, *p.pc}, p.t)
                             : hamiltonian_expectation(params, p.n, squeeze, p.t);
  auto entry = deviation("hamiltonian_vs_quadrature", p, m.energy / m.norm, closed, ctx.tol.hamiltonian_relative, true);
  entry.note = m.warning;
  return {entry};
}

std::vector<ValidationEntry> check_residual(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const StateSpec spec = p.spec();
  const GridSpec grid = make_grid(params, spec, p.t, ctx.config.grid_points);
  const double residual = schrodinger_residual(params, spec, p.t, grid, ctx.config.options);
  return {make_entry("schrodinger_residual", p, residual, 0.0, ctx.tol.residual, residual < ctx.tol.residual)};
}

std::vector<ValidationEntry> check_ladder(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const SqueezeParams squeeze{p.r, p.phi};
  const GridSpec grid = make_grid(params, StateSpec::number(p.n, squeeze), p.t, ctx.config.grid_points);
  const auto q = grid.positions();
  const auto psi = sample_state(params, StateSpec::number(p.n, squeeze), p.t, q, ctx.config.options);
  const auto lowered = apply_annihilation(params, squeeze, p.t, psi, grid);

  std::vector<ValidationEntry> entries;
  if (p.n == 0) {
    const double ratio = l2_norm(lowered, grid.dq) / l2_norm(psi, grid.dq);
    entries.push_back(make_entry("ladder_action.annihilation", p, ratio, 0.0, ctx.tol.ladder_vacuum,
                                 ratio < ctx.tol.ladder_vacuum, "||a psi_0|| / ||psi_0||"));
  } else {
    auto target = sample_state(params, StateSpec::number(p.n - 1, squeeze), p.t, q, ctx.config.options);
    for (auto& v : target) v *= std::sqrt(static_cast<double>(p.n));
    const double err = relative_l2(lowered, target, grid.dq);
    entries.push_back(make_entry("ladder_action.annihilation", p, err, 0.0, ctx.tol.ladder_step,
                                 err < ctx.tol.ladder_step, "||a psi_n - sqrt(n) psi_{n-1}|| / ||sqrt(n) psi_{n-1}||"));
  }

  // a_{r phi} = mu* a_0 - nu* a_0^dagger
  const auto base_lowered = apply_annihilation(params, {}, p.t, psi, grid);
  const auto base_raised = apply_creation(params, {}, p.t, psi, grid);
  const complex mu = squeeze.mu();
  const complex nu = squeeze.nu();
  std::vector<complex> combined(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    combined[i] = std::conj(mu) * base_lowered[i] - std::conj(nu) * base_raised[i];
  }
  const double scale = std::max(l2_norm(base_lowered, grid.dq), l2_norm(psi, grid.dq));
  std::vector<complex> diff(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) diff[i] = lowered[i] - combined[i];
  const double err = l2_norm(diff, grid.dq) / scale;
  entries.push_back(make_entry("ladder_action.bogoliubov", p, err, 0.0, ctx.tol.bogoliubov, err < ctx.tol.bogoliubov,
                               "||a_rphi psi - (mu* a_0 - nu* a_0^+) psi|| relative"));
  return entries;
}

std::vector<ValidationEntry> check_coherent(const ParamPoint& p, const Context& ctx) {
  if (!p.qc) return {};
  const auto params = p.params();
  const Moments m = state_moments(p, ctx);
  const double uncertainty = std::sqrt(m.var_q() * m.var_p()) / m.norm;
  const double ground = uncertainty_product(params, 0, {p.r, p.phi}, p.t).product;
  return {deviation("coherent_contract.mean_q", p, m.q / m.norm, *p.qc, ctx.tol.coherent_mean),
          deviation("coherent_contract.mean_p", p, m.p / m.norm, *p.pc, ctx.tol.coherent_mean),
          deviation("coherent_contract.uncertainty", p, uncertainty, ground, ctx.tol.coherent_uncertainty, true)};
}

std::vector<ValidationEntry> check_crank_nicolson(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const StateSpec spec = p.spec();
  const double t1 = p.t + kPi / params.omega();
  const GridSpec grid = make_grid(params, spec, p.t, std::max(ctx.config.grid_points, 8193));
  const auto q = grid.positions();
  const auto initial = sample_state(params, spec, p.t, q, ctx.config.options);
  const auto evolved = crank_nicolson_evolve(params, initial, grid, p.t, t1, ctx.config.cn_steps);
  const auto exact = sample_state(params, advance(params, spec, p.t, t1), t1, q, ctx.config.options);

  const complex overlap = inner_product(exact, evolved.samples, grid.dq);
  const double fidelity =
      std::norm(overlap) / (inner_product(exact, exact, grid.dq).real() *
                            inner_product(evolved.samples, evolved.samples, grid.dq).real());
  const double drift = std::abs(evolved.final_norm - evolved.initial_norm) / evolved.initial_norm;
  std::vector<ValidationEntry> entries{
      make_entry("crank_nicolson.fidelity", p, 1.0 - fidelity, 0.0, ctx.tol.cn_fidelity,
                 1.0 - fidelity <= ctx.tol.cn_fidelity, "1 - |<analytic|numeric>|^2 after one period"),
      make_entry("crank_nicolson.norm_drift", p, drift, 0.0, ctx.tol.cn_norm_drift, drift < ctx.tol.cn_norm_drift)};
  if (p.qc) {
    const Moments m = moments(evolved.samples, grid, params, t1);
    const auto target = std::get<CoherentState>(advance(params, spec, p.t, t1).kind);
    entries.push_back(deviation("crank_nicolson.mean_q", p, m.q / m.norm, target.qc, ctx.tol.cn_fidelity));
    entries.push_back(deviation("crank_nicolson.mean_p", p, m.p / m.norm, target.pc, ctx.tol.cn_fidelity));
  }
  return entries;
}

std::vector<ValidationEntry> check_sim_wave(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  if (!(params.gamma() > 0.0)) {
    ValidationEntry entry{"sim_wave.exact_phase", p, 0.0, 0.0, ctx.tol.sim_wave, EntryStatus::Skipped,
                          "special squeeze undefined at gamma = 0"};
    return {entry};
  }
  const SpecialSqueeze special = special_squeeze(params);
  const double w = params.omega();
  const double width = std::sqrt(params.m0() * w / params.hbar());
  const GridSpec grid = make_grid(params, StateSpec::number(p.n, special.squeeze), 0.0, ctx.config.grid_points);
  const auto q = grid.positions();
  const auto psi = sample_state(params, StateSpec::number(p.n, special.squeeze), 0.0, q, ctx.config.options);

  double norm = std::pow(width * width / kPi, 0.25);
  for (int k = 1; k <= p.n; ++k) norm /= std::sqrt(2.0 * k);
  auto max_deviation = [&](double phase) {
    const complex factor = std::polar(1.0, -phase * (p.n + 0.5));
    double worst = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double x = width * q[i];
      const double undamped = norm * hermite(p.n, x) * std::exp(-0.5 * x * x);
      worst = std::max(worst, std::abs(psi[i] - factor * undamped));
    }
    return worst;
  };

  const double exact_phase = std::atan(params.gamma() / (4.0 * w));
  const double linear_phase = params.gamma() / (4.0 * w);
  const double exact_dev = max_deviation(exact_phase);
  const double linear_dev = max_deviation(linear_phase);
  return {
      make_entry("sim_wave.exact_phase", p, exact_dev, 0.0, ctx.tol.sim_wave, exact_dev < ctx.tol.sim_wave,
                 "constant phase arctan(gamma/4 omega) = " + fmt(exact_phase)),
      recorded("sim_wave.linear_phase", p, linear_dev, 0.0,
               "max deviation with phase gamma/4 omega = " + fmt(linear_phase) + " (not asserted)"),
      recorded("sim_wave.branch", p, special.squeeze.phi(), std::atan(4.0 * params.omega() / params.gamma()),
               std::string(special.branch_shifted ? "phi0 = arctan(4 omega/gamma) + pi selected"
                                                  : "phi0 = arctan(4 omega/gamma) selected") +
                   "; rejected branch mismatch " + fmt(special.rejected_mismatch))};
}

std::vector<ValidationEntry> check_time_average(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const TimeAverage average = uncertainty_time_avg(params, p.n, {p.r, p.phi});
  const double bound = 0.5 * params.hbar() * sigma0(params) * (2.0 * p.n + 1.0);
  std::vector<ValidationEntry> entries;
  if (p.r == 0.0) {
    entries.push_back(deviation("time_average.bound", p, average.numeric, bound, ctx.tol.time_average));
  } else {
    entries.push_back(make_entry("time_average.bound", p, average.numeric, bound, ctx.tol.time_average,
                                 average.numeric >= bound - ctx.tol.time_average, "numeric average >= bound"));
  }
  if (average.closed_form) {
    entries.push_back(recorded("time_average.closed_form", p, average.numeric, *average.closed_form,
                               "numeric minus closed form = " + fmt(average.numeric - *average.closed_form)));
  }
  return entries;
}

std::vector<ValidationEntry> check_hamiltonian_minimum(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const double period = kPi / params.omega();
  double best = INFINITY;
  int best_n = -1;
  double best_r = -1.0;
  for (int n = 0; n <= 4; ++n) {
    for (double r : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      for (double phi : {0.0, kPi / 4.0, 1.0, kPi, 5.0}) {
        double sum = 0.0;
        for (int k = 0; k < 64; ++k) sum += hamiltonian_expectation(params, n, {r, phi}, period * k / 64.0);
        if (sum / 64.0 < best - 1e-15) {
          best = sum / 64.0;
          best_n = n;
          best_r = r;
        }
      }
    }
  }
  const double expected = hamiltonian_time_avg(params, 0, {});
  const bool pass = best_n == 0 && best_r == 0.0 && std::abs(best - expected) <= ctx.tol.hamiltonian_relative * expected;
  return {make_entry("hamiltonian_minimum", p, best, expected, ctx.tol.hamiltonian_relative, pass,
                     "argmin n = " + std::to_string(best_n) + ", r = " + fmt(best_r))};
}

std::vector<ValidationEntry> check_width_sign(const ParamPoint& p, const Context& ctx) {
  const auto params = p.params();
  const StateSpec spec = p.spec();
  const GridSpec grid = make_grid(params, spec, p.t, ctx.config.grid_points);
  EvalOptions flipped = ctx.config.options;
  flipped.width_sign = ctx.config.options.width_sign == WidthSign::Normalizable ? WidthSign::Flipped
                                                                                : WidthSign::Normalizable;
  const double other = schrodinger_residual(params, spec, p.t, grid, flipped);
  const double used = schrodinger_residual(params, spec, p.t, grid, ctx.config.options);
  return {recorded("width_sign_discrepancy", p, other, used,
                   "residual with the opposite sign of B (measured) vs the sign in use (expected)")};
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks{
      {"wronskian", check_wronskian},
      {"sigma0_forms", check_sigma0},
      {"gmus_constancy", check_gmus},
      {"lower_bound", check_lower_bound},
      {"normalization", check_normalization},
      {"orthogonality", check_orthogonality},
      {"moments_vs_closed_form", check_moments},
      {"hamiltonian_vs_quadrature", check_hamiltonian},
      {"hamiltonian_minimum", check_hamiltonian_minimum},
      {"schrodinger_residual", check_residual},
      {"ladder_action", check_ladder},
      {"coherent_contract", check_coherent},
      {"crank_nicolson", check_crank_nicolson},
      {"sim_wave", check_sim_wave},
      {"time_average", check_time_average},
      {"width_sign_discrepancy", check_width_sign},
  };
  return checks;
}

std::vector<ValidationEntry> run_one(const std::string& name, const ParamPoint& point, const Context& ctx) {
  const auto& checks = registry();
  const auto it = checks.find(name);
  if (it == checks.end()) {
    return {ValidationEntry{name, point, 0.0, 0.0, 0.0, EntryStatus::Skipped, "unknown check"}};
  }
  try {
    (void)point.params();
  } catch (const InvalidArgument& e) {
    return {ValidationEntry{name, point, 0.0, 0.0, 0.0, EntryStatus::Skipped, e.what()}};
  }
  try {
    return it->second(point, ctx);
  } catch (const std::exception& e) {
    return {ValidationEntry{name, point, NAN, 0.0, 0.0, EntryStatus::Fail, e.what()}};
  }
}

ParamPoint with(ParamPoint base, double r, double phi, int n, double t) {
  base.r = r;
  base.phi = phi;
  base.n = n;
  base.t = t;
  base.qc.reset();
  base.pc.reset();
  return base;
}

ParamPoint coherent_at(ParamPoint base, double qc, double pc, double r, double phi, double t) {
  base = with(base, r, phi, 0, t);
  base.qc = qc;
  base.pc = pc;
  return base;
}

json point_to_json(const ParamPoint& p) {
  json j{{"m0", p.m0}, {"gamma", p.gamma}, {"omega0", p.omega0}, {"hbar", p.hbar}, {"r", p.r},
         {"phi", p.phi}, {"n", p.n}, {"t", p.t}};
  j["qc"] = p.qc ? json(*p.qc) : json(nullptr);
  j["pc"] = p.pc ? json(*p.pc) : json(nullptr);
  return j;
}

// JSON has no NaN/inf; report them as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

Tolerances tolerances_from_json(std::string_view text, Tolerances base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("tolerance overrides: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("tolerance overrides must be a JSON object");
  const std::map<std::string, double Tolerances::*> fields{
      {"wronskian", &Tolerances::wronskian},
      {"sigma0_forms", &Tolerances::sigma0_forms},
      {"gmus", &Tolerances::gmus},
      {"lower_bound", &Tolerances::lower_bound},
      {"normalization", &Tolerances::normalization},
      {"orthogonality", &Tolerances::orthogonality},
      {"moments_relative", &Tolerances::moments_relative},
      {"hamiltonian_relative", &Tolerances::hamiltonian_relative},
      {"residual", &Tolerances::residual},
      {"ladder_vacuum", &Tolerances::ladder_vacuum},
      {"ladder_step", &Tolerances::ladder_step},
      {"bogoliubov", &Tolerances::bogoliubov},
      {"coherent_mean", &Tolerances::coherent_mean},
      {"coherent_uncertainty", &Tolerances::coherent_uncertainty},
      {"cn_fidelity", &Tolerances::cn_fidelity},
      {"cn_norm_drift", &Tolerances::cn_norm_drift},
      {"sim_wave", &Tolerances::sim_wave},
      {"time_average", &Tolerances::time_average},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw InvalidArgument("unknown tolerance '" + key + "'");
    if (!value.is_number()) throw InvalidArgument("tolerance '" + key + "' must be a number");
    base.*(it->second) = value.get<double>();
  }
  return base;
}

PhysicalParams ParamPoint::params() const { return make_params(m0, gamma, omega0, hbar); }

StateSpec ParamPoint::spec() const {
  const SqueezeParams squeeze{r, phi};
  if (qc || pc) return StateSpec::coherent(qc.value_or(0.0), pc.value_or(0.0), squeeze);
  return StateSpec::number(n, squeeze);
}

std::string ParamPoint::key() const {
  char buffer[320];
  std::snprintf(buffer, sizeof buffer, "m0=%.10g gamma=%.10g omega0=%.10g hbar=%.10g r=%.10g phi=%.10g n=%02d t=%.10g",
                m0, gamma, omega0, hbar, r, phi, n, t);
  std::string key = buffer;
  if (qc || pc) {
    std::snprintf(buffer, sizeof buffer, " qc=%.10g pc=%.10g", qc.value_or(0.0), pc.value_or(0.0));
    key += buffer;
  }
  return key;
}

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Schedule default_schedule(const ParamPoint& base) {
  const ParamPoint origin = with(base, 0.0, 0.0, 0, 0.0);
  Schedule schedule;

  {
    ScheduledCheck wr{"wronskian", {}};
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ratio(0.0, 1.9);
    std::uniform_real_distribution<double> squeeze(0.0, 3.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    for (int i = 0; i < 200; ++i) {
      ParamPoint p = origin;
      p.gamma = ratio(rng) * base.omega0;
      p.r = squeeze(rng);
      p.phi = phase(rng);
      p.t = time(rng);
      wr.points.push_back(p);
    }
    schedule.push_back(std::move(wr));
  }

  schedule.push_back({"sigma0_forms", {origin}});

  {
    ScheduledCheck gm{"gmus_constancy", {}};
    const double period = kPi / origin.params().omega();
    for (int k = 0; k < 64; ++k) gm.points.push_back(with(origin, 0.0, 0.0, 0, 2.0 * period * k / 63.0));
    schedule.push_back(std::move(gm));
  }

  {
    ScheduledCheck lb{"lower_bound", {}};
    ScheduledCheck hm{"hamiltonian_minimum", {}};
    for (double ratio : {0.0, 0.4, 1.2, 1.8}) {
      ParamPoint p = origin;
      p.gamma = ratio * base.omega0;
      lb.points.push_back(p);
      hm.points.push_back(p);
    }
    schedule.push_back(std::move(lb));
    schedule.push_back(std::move(hm));
  }

  {
    ScheduledCheck norm{"normalization", {}};
    for (int n = 0; n <= 8; ++n)
      for (double r : {0.0, 0.5, 1.5})
        for (double phi : {0.0, 1.0, kPi})
          for (double t : {0.0, 0.37, 2.0}) norm.points.push_back(with(origin, r, phi, n, t));
    norm.points.push_back(coherent_at(origin, 1.0, -0.5, 0.7, 2.0, 0.8));
    schedule.push_back(std::move(norm));
  }

  {
    ScheduledCheck orth{"orthogonality", {}};
    for (double r : {0.0, 0.5, 1.5})
      for (double t : {0.0, 0.37, 2.0}) orth.points.push_back(with(origin, r, 1.0, 0, t));
    schedule.push_back(std::move(orth));
  }

  {
    ScheduledCheck mom{"moments_vs_closed_form", {}};
    for (int n : {0, 1, 2, 4})
      for (double r : {0.0, 0.5, 1.5})
        for (double t : {0.0, 0.37, 2.0}) mom.points.push_back(with(origin, r, 1.0, n, t));
    schedule.push_back(std::move(mom));
  }

  {
    ScheduledCheck ham{"hamiltonian_vs_quadrature", {}};
    ScheduledCheck coh{"coherent_contract", {}};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> squeeze(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> time(0.0, 3.0);
    std::uniform_real_distribution<double> shift(-2.0, 2.0);
    std::uniform_int_distribution<int> level(0, 4);
    for (int i = 0; i < 10; ++i) {
      const double r = squeeze(rng);
      const double phi = phase(rng);
      const double t = time(rng);
      const int n = level(rng);
      ham.points.push_back(with(origin, r, phi, n, t));
      const double qc = shift(rng);
      const double pc = shift(rng);
      coh.points.push_back(coherent_at(origin, qc, pc, r, phi, t));
    }
    ham.points.push_back(with(origin, 0.6, 0.0, 1, 0.9));
    schedule.push_back(std::move(ham));
    schedule.push_back(std::move(coh));
  }

  {
    ScheduledCheck res{"schrodinger_residual", {}};
    const std::vector<std::tuple<double, double, double>> lattice{
        {0.0, 0.0, 1.0}, {0.5, 1.0, 0.37}, {1.0, kPi, 2.0}, {0.3, 5.0, 0.7}, {1.5, 1.0, 1.3}};
    for (int n = 0; n <= 4; ++n)
      for (const auto& [r, phi, t] : lattice) res.points.push_back(with(origin, r, phi, n, t));
    res.points.push_back(coherent_at(origin, 1.0, -0.5, 0.7, 2.0, 0.8));
    res.points.push_back(coherent_at(origin, -0.8, 1.5, 0.0, 0.0, 1.4));
    schedule.push_back(std::move(res));
  }

  {
    ScheduledCheck lad{"ladder_action", {}};
    for (int n = 0; n <= 4; ++n) {
      lad.points.push_back(with(origin, 0.3, 1.0, n, 0.7));
      lad.points.push_back(with(origin, 1.0, 4.0, n, 1.9));
    }
    schedule.push_back(std::move(lad));
  }

  schedule.push_back({"crank_nicolson", {with(origin, 0.5, 1.0, 0, 0.0)}});

  {
    ScheduledCheck sim{"sim_wave", {}};
    for (int n : {0, 1, 2}) sim.points.push_back(with(origin, 0.0, 0.0, n, 0.0));
    schedule.push_back(std::move(sim));
  }

  {
    ScheduledCheck avg{"time_average", {}};
    for (double r : {0.0, 0.25, 0.5, 1.0}) avg.points.push_back(with(origin, r, 0.7, 0, 0.0));
    schedule.push_back(std::move(avg));
  }

  schedule.push_back({"width_sign_discrepancy", {with(origin, 0.0, 0.0, 0, 1.0)}});
  return schedule;
}

Schedule schedule_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("schedule: ") + e.what());
  }
  if (!j.is_array()) throw InvalidArgument("schedule must be a JSON array");
  Schedule schedule;
  try {
    for (const auto& item : j) {
      ScheduledCheck check;
      check.check = item.at("check").get<std::string>();
      for (const auto& pj : item.value("points", json::array())) {
        ParamPoint p;
        p.m0 = pj.value("m0", p.m0);
        p.gamma = pj.value("gamma", p.gamma);
        p.omega0 = pj.value("omega0", p.omega0);
        p.hbar = pj.value("hbar", p.hbar);
        p.r = pj.value("r", p.r);
        p.phi = pj.value("phi", p.phi);
        p.n = pj.value("n", p.n);
        p.t = pj.value("t", p.t);
        if (pj.contains("qc") && !pj["qc"].is_null()) p.qc = pj["qc"].get<double>();
        if (pj.contains("pc") && !pj["pc"].is_null()) p.pc = pj["pc"].get<double>();
        if (p.qc.has_value() != p.pc.has_value()) {
          p.qc = p.qc.value_or(0.0);
          p.pc = p.pc.value_or(0.0);
        }
        check.points.push_back(p);
      }
      schedule.push_back(std::move(check));
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("schedule: ") + e.what());
  }
  return schedule;
}

ReportSummary ValidationReport::summary() const {
  ReportSummary s;
  for (const auto& e : entries) {
    ++s.total;
    switch (e.status) {
      case EntryStatus::Pass: ++s.passed; break;
      case EntryStatus::Fail: ++s.failed; break;
      case EntryStatus::Skipped: ++s.skipped; break;
      case EntryStatus::Recorded: ++s.recorded; break;
    }
  }
  return s;
}

bool ValidationReport::passed() const { return summary().failed == 0; }

ValidationReport validate(const ParamPoint& base, const Schedule& schedule, const ValidationConfig& config) {
  struct Task {
    const std::string* check;
    const ParamPoint* point;
  };
  std::vector<Task> tasks;
  for (const auto& item : schedule)
    for (const auto& point : item.points) tasks.push_back({&item.check, &point});

  const Context ctx{config, config.tolerances};
  std::vector<std::vector<ValidationEntry>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_one(*tasks[i].check, *tasks[i].point, ctx);
  };
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  ValidationReport report{std::string(kReportVersion), base, {}};
  for (auto& chunk : results)
    for (auto& entry : chunk) report.entries.push_back(std::move(entry));
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const auto& a, const auto& b) {
    if (a.check_name != b.check_name) return a.check_name < b.check_name;
    return a.point.key() < b.point.key();
  });
  return report;
}

std::string_view to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::Pass: return "pass";
    case EntryStatus::Fail: return "fail";
    case EntryStatus::Skipped: return "skipped";
    case EntryStatus::Recorded: return "recorded";
  }
  return "unknown";
}

std::string to_json(const ValidationReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json pass = e.status == EntryStatus::Pass ? json(true) : e.status == EntryStatus::Fail ? json(false) : json(nullptr);
    entries.push_back({{"check_name", e.check_name},
                       {"parameter_tuple", point_to_json(e.point)},
                       {"measured", number(e.measured)},
                       {"expected", number(e.expected)},
                       {"tolerance", number(e.tolerance)},
                       {"pass", pass},
                       {"status", std::string(to_string(e.status))},
                       {"note", e.note}});
  }
  const auto s = report.summary();
  json doc{{"version", report.version},
           {"params", point_to_json(report.base)},
           {"entries", entries},
           {"summary",
            {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped},
             {"recorded", s.recorded}}}};
  return doc.dump(2) + "\n";
}

std::string to_table(const ValidationReport& report) {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-34s %-9s %-24s %-24s %-10s %s\n", "check", "status", "measured", "expected",
                "tolerance", "parameters");
  out << line;
  for (const auto& e : report.entries) {
    std::snprintf(line, sizeof line, "%-34s %-9s %-24.17g %-24.17g %-10.3g %s", e.check_name.c_str(),
                  std::string(to_string(e.status)).c_str(), e.measured, e.expected, e.tolerance, e.point.key().c_str());
    out << line;
    if (!e.note.empty()) out << "  # " << e.note;
    out << '\n';
  }
  const auto s = report.summary();
  out << "summary: total=" << s.total << " passed=" << s.passed << " failed=" << s.failed << " skipped=" << s.skipped
      << " recorded=" << s.recorded << '\n';
  return out.str();
}

}  // namespace ckosc::oracle
