#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ckosc/errors.hpp"
#include "ckosc/observables.hpp"
#include "ckosc/oracle/validation.hpp"

namespace ckosc::cli {

namespace {

struct Column {
  const char* name;
  const char* unit;
};

// CSV or JSON-lines table; the first line names every column with its unit.
class TableWriter {
 public:
  TableWriter(std::ostream& out, OutputFormat format, std::vector<Column> columns)
      : out_(out), format_(format), columns_(std::move(columns)) {
    if (format_ == OutputFormat::Csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out_ << (i ? "," : "") << columns_[i].name << '[' << columns_[i].unit << ']';
      }
      out_ << '\n';
    } else {
      out_ << "{\"columns\":[";
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out_ << (i ? "," : "") << "{\"name\":\"" << columns_[i].name << "\",\"unit\":\"" << columns_[i].unit << "\"}";
      }
      out_ << "]}\n";
    }
  }

  void row(std::initializer_list<double> values) {
    std::size_t i = 0;
    if (format_ == OutputFormat::Json) out_ << '{';
    for (double v : values) {
      if (format_ == OutputFormat::Csv) {
        out_ << (i ? "," : "") << number(v);
      } else {
        out_ << (i ? "," : "") << '"' << columns_[i].name << "\":" << json_number(v);
      }
      ++i;
    }
    out_ << (format_ == OutputFormat::Json ? "}\n" : "\n");
  }

 private:
  static std::string number(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
  }
  static std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }

  std::ostream& out_;
  OutputFormat format_;
  std::vector<Column> columns_;
};

std::vector<double> time_samples(const RunConfig& config) {
  std::vector<double> times(static_cast<std::size_t>(config.nt));
  for (int k = 0; k < config.nt; ++k) {
    times[static_cast<std::size_t>(k)] =
        config.nt == 1 ? config.t0 : config.t0 + (config.t1 - config.t0) * k / (config.nt - 1);
  }
  return times;
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw UsageError(field, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int cmd_uncertainty(const RunConfig& config, std::ostream& out) {
  check(config);
  const auto params = config.params();
  const auto squeeze = config.squeeze();
  // Coherent states share the n = 0 uncertainty.
  const int n = config.is_coherent() ? 0 : config.n;
  TableWriter table(out, config.format,
                    {{"t", "time"}, {"dq", "length"}, {"dp", "momentum"}, {"product", "action"},
                     {"bound", "action"}, {"ratio", "1"}});
  for (double t : time_samples(config)) {
    const auto record = uncertainty_product(params, n, squeeze, t);
    table.row({t, record.dq, record.dp, record.product, record.bound, record.product / record.bound});
  }
  return kExitOk;
}

int cmd_wavefunction(const RunConfig& config, std::ostream& out) {
  check(config);
  const auto params = config.params();
  const auto spec = config.spec();
  const auto grid = oracle::make_grid(params, spec, config.t0, config.grid_points);
  const auto positions = grid.positions();
  const auto psi = sample_state(params, spec, config.t0, positions, config.options());
  TableWriter table(out, config.format,
                    {{"q", "length"}, {"re_psi", "length^-1/2"}, {"im_psi", "length^-1/2"}, {"density", "length^-1"}});
  for (std::size_t i = 0; i < positions.size(); ++i) {
    table.row({positions[i], psi[i].real(), psi[i].imag(), std::norm(psi[i])});
  }
  return kExitOk;
}

int cmd_trajectory(const RunConfig& config, std::ostream& out) {
  check(config);
  if (!config.is_coherent()) throw UsageError("qc/pc", "trajectory needs a coherent state (set --qc and/or --pc)");
  const auto params = config.params();
  const auto squeeze = config.squeeze();
  const complex alpha = coherent_alpha(params, squeeze, {config.qc.value_or(0.0), config.pc.value_or(0.0)}, config.t0);
  TableWriter table(out, config.format, {{"t", "time"}, {"qc", "length"}, {"pc", "momentum"}, {"energy", "energy"}});
  for (double t : time_samples(config)) {
    const PhasePoint point = coherent_trajectory(params, squeeze, alpha, t);
    table.row({t, point.qc, point.pc, coherent_hamiltonian_expectation(params, squeeze, point, t)});
  }
  return kExitOk;
}

int cmd_hamiltonian(const RunConfig& config, std::ostream& out) {
  check(config);
  const auto params = config.params();
  const auto squeeze = config.squeeze();
  TableWriter table(out, config.format, {{"t", "time"}, {"energy", "energy"}, {"period_average", "energy"}});
  if (config.is_coherent()) {
    const complex alpha =
        coherent_alpha(params, squeeze, {config.qc.value_or(0.0), config.pc.value_or(0.0)}, config.t0);
    for (double t : time_samples(config)) {
      const PhasePoint point = coherent_trajectory(params, squeeze, alpha, t);
      table.row({t, coherent_hamiltonian_expectation(params, squeeze, point, t), NAN});
    }
    return kExitOk;
  }
  const double average = hamiltonian_time_avg(params, config.n, squeeze);
  for (double t : time_samples(config)) {
    table.row({t, hamiltonian_expectation(params, config.n, squeeze, t), average});
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  check(config);
  oracle::ParamPoint base;
  base.m0 = config.m0;
  base.gamma = config.gamma;
  base.omega0 = config.omega0;
  base.hbar = config.hbar;
  base.r = config.r;
  base.phi = config.phi;
  base.n = config.n;
  base.t = config.t0;
  base.qc = config.qc;
  base.pc = config.pc;

  oracle::ValidationConfig settings;
  settings.options = config.options();
  settings.grid_points = config.grid_points;
  if (!config.tol_overrides.empty()) {
    try {
      settings.tolerances = oracle::tolerances_from_json(read_file(config.tol_overrides, "tol-overrides"));
    } catch (const InvalidArgument& e) {
      throw UsageError("tol-overrides", e.what());
    }
  }
  oracle::Schedule schedule;
  if (config.schedule.empty()) {
    schedule = oracle::default_schedule(base);
  } else {
    try {
      schedule = oracle::schedule_from_json(read_file(config.schedule, "schedule"));
    } catch (const InvalidArgument& e) {
      throw UsageError("schedule", e.what());
    } catch (const std::exception& e) {
      throw UsageError("schedule", e.what());
    }
  }

  const auto report = oracle::validate(base, schedule, settings);
  out << (config.format == OutputFormat::Json ? oracle::to_json(report) : oracle::to_table(report));
  return report.passed() ? kExitOk : kExitValidationFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gaussian states of the Caldirola-Kanai oscillator: tables and numerical validation", "ckosc"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key = value configuration file (flags override it)");

  RunConfig config;
  double qc = 0.0;
  double pc = 0.0;
  std::string format = "csv";
  app.add_option("--gamma", config.gamma, "Damping factor (1/time)")->capture_default_str();
  app.add_option("--omega0", config.omega0, "Natural frequency (1/time)")->capture_default_str();
  app.add_option("--m0", config.m0, "Mass at t = 0")->capture_default_str();
  app.add_option("--hbar", config.hbar, "Action scale")->capture_default_str();
  app.add_option("--r", config.r, "Squeeze magnitude")->capture_default_str();
  app.add_option("--phi", config.phi, "Squeeze phase (radians)")->capture_default_str();
  app.add_option("--n", config.n, "Number-state index")->capture_default_str();
  auto* qc_opt = app.add_option("--qc", qc, "Coherent-state position expectation at t0");
  auto* pc_opt = app.add_option("--pc", pc, "Coherent-state momentum expectation at t0");
  app.add_option("--t0", config.t0, "Start time (also the wavefunction time)")->capture_default_str();
  app.add_option("--t1", config.t1, "End time")->capture_default_str();
  app.add_option("--nt", config.nt, "Number of time samples")->capture_default_str();
  app.add_option("--grid-points", config.grid_points, "Minimum number of position grid points")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", config.out, "Output path (default: stdout)");
  app.add_option("--tol-overrides", config.tol_overrides, "JSON object of tolerance overrides for validate");
  app.add_option("--schedule", config.schedule, "JSON validation schedule (default: built-in lattice)");
  app.add_flag("--debug-flip-b-sign", config.flip_width_sign, "Negative control")->group("");

  std::function<int(const RunConfig&, std::ostream&)> command;
  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&, std::ostream&)) {
    app.add_subcommand(name, help)->fallthrough()->callback([&command, fn] { command = fn; });
  };
  add("uncertainty", "Uncertainty product over the time window", cmd_uncertainty);
  add("wavefunction", "Wave function on the oracle grid at t0", cmd_wavefunction);
  add("trajectory", "Classical trajectory and energy of a coherent state", cmd_trajectory);
  add("hamiltonian", "Energy expectation over the time window", cmd_hamiltonian);
  add("validate", "Run the numerical validation suite", cmd_validate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (*qc_opt) config.qc = qc;
  if (*pc_opt) config.pc = pc;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  try {
    if (config.out.empty()) return command(config, out);
    std::ofstream file(config.out);
    if (!file) throw UsageError("out", "cannot open '" + config.out + "' for writing");
    const int code = command(config, file);
    file.flush();
    if (!file) throw UsageError("out", "write to '" + config.out + "' failed");
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ckosc::cli
