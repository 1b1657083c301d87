#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ckosc/modes.hpp"
#include "ckosc/oracle/grid.hpp"
#include "ckosc/states.hpp"

namespace ckosc::oracle {

/// Default tolerances of every registered check; overridable from JSON.
struct Tolerances {
  double wronskian = 1e-12;
  double sigma0_forms = 1e-12;
  double gmus = 1e-10;
  double lower_bound = 1e-12;
  double normalization = 1e-10;
  double orthogonality = 1e-9;
  double moments_relative = 1e-8;
  double hamiltonian_relative = 1e-7;
  double residual = 1e-5;
  double ladder_vacuum = 1e-6;
  double ladder_step = 1e-5;
  double bogoliubov = 1e-6;
  double coherent_mean = 1e-8;
  double coherent_uncertainty = 1e-9;
  double cn_fidelity = 1e-6;
  double cn_norm_drift = 1e-8;
  double sim_wave = 1e-9;
  double time_average = 1e-9;
};

/// Applies {"name": value, ...} on top of base. Throws InvalidArgument on unknown keys or non-numbers.
Tolerances tolerances_from_json(std::string_view text, Tolerances base = {});

/// One parameter tuple of a check. Checks that sweep an inner lattice use only the fields they need.
struct ParamPoint {
  double m0 = 1.0;
  double gamma = 1.2;
  double omega0 = 1.0;
  double hbar = 1.0;
  double r = 0.0;
  double phi = 0.0;
  int n = 0;
  std::optional<double> qc;  ///< set (with pc) for coherent states
  std::optional<double> pc;
  double t = 0.0;

  PhysicalParams params() const;
  StateSpec spec() const;
  /// Canonical text form used for deterministic ordering.
  std::string key() const;
};

struct ScheduledCheck {
  std::string check;
  std::vector<ParamPoint> points;
};
using Schedule = std::vector<ScheduledCheck>;

/// Names accepted in a schedule.
const std::vector<std::string>& registered_checks();

/// Lattices exercising every registered check around the physical constants of base.
Schedule default_schedule(const ParamPoint& base);

/// Reads [{"check": name, "points": [{"gamma": ..., ...}, ...]}, ...]; omitted fields take ParamPoint defaults.
Schedule schedule_from_json(std::string_view text);

enum class EntryStatus { Pass, Fail, Skipped, Recorded };

struct ValidationEntry {
  std::string check_name;
  ParamPoint point;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  EntryStatus status = EntryStatus::Pass;
  std::string note;
};

struct ReportSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int recorded = 0;
};

struct ValidationReport {
  std::string version;
  ParamPoint base;
  std::vector<ValidationEntry> entries;

  ReportSummary summary() const;
  /// True iff no entry failed (skipped and recorded entries do not count).
  bool passed() const;
};

struct ValidationConfig {
  Tolerances tolerances;
  EvalOptions options;
  int grid_points = kDefaultGridPoints;
  int cn_steps = 4000;
  int threads = 0;  ///< 0: hardware concurrency
};

/// Runs every scheduled check; failures become entries rather than exceptions.
/// Entries are sorted by (check_name, point key) whatever the thread count.
ValidationReport validate(const ParamPoint& base, const Schedule& schedule, const ValidationConfig& config = {});

inline constexpr std::string_view kReportVersion = "1";

/// {version, params, entries[], summary}; numbers with 17 significant digits.
std::string to_json(const ValidationReport& report);
/// Fixed-width human-readable table.
std::string to_table(const ValidationReport& report);

std::string_view to_string(EntryStatus status);

}  // namespace ckosc::oracle
