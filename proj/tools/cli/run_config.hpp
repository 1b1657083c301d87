#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ckosc/modes.hpp"
#include "ckosc/oracle/grid.hpp"
#include "ckosc/states.hpp"

namespace ckosc::cli {

enum class OutputFormat { Csv, Json };

/// Everything a subcommand needs. Defaults: hbar = m0 = omega0 = 1, gamma = 1.2, r = phi = 0, n = 0,
/// t in [0, 10] sampled at 101 points, 4097 grid points, CSV to stdout.
struct RunConfig {
  double m0 = 1.0;
  double gamma = 1.2;
  double omega0 = 1.0;
  double hbar = 1.0;
  double r = 0.0;
  double phi = 0.0;
  int n = 0;
  std::optional<double> qc;  ///< either of qc/pc selects a coherent state
  std::optional<double> pc;
  double t0 = 0.0;
  double t1 = 10.0;
  int nt = 101;
  int grid_points = oracle::kDefaultGridPoints;
  OutputFormat format = OutputFormat::Csv;
  std::string out;  ///< empty: stdout
  std::string tol_overrides;
  std::string schedule;
  bool flip_width_sign = false;  ///< hidden negative-control switch

  bool is_coherent() const noexcept { return qc.has_value() || pc.has_value(); }
  PhysicalParams params() const;
  SqueezeParams squeeze() const;
  StateSpec spec() const;
  EvalOptions options() const;
};

/// Invalid configuration; names the offending field. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Checks every field; throws UsageError on the first invalid one.
void check(const RunConfig& config);

}  // namespace ckosc::cli
