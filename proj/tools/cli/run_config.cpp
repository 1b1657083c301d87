#include "cli/run_config.hpp"

#include <cmath>

#include "ckosc/errors.hpp"

namespace ckosc::cli {

PhysicalParams RunConfig::params() const {
  try {
    return make_params(m0, gamma, omega0, hbar);
  } catch (const NotUnderdamped& e) {
    throw UsageError("gamma", e.what());
  } catch (const InvalidArgument& e) {
    throw UsageError("m0/omega0/hbar/gamma", e.what());
  }
}

SqueezeParams RunConfig::squeeze() const {
  try {
    return {r, phi};
  } catch (const InvalidArgument& e) {
    throw UsageError(std::isfinite(phi) ? "r" : "phi", e.what());
  }
}

StateSpec RunConfig::spec() const {
  if (is_coherent()) return StateSpec::coherent(qc.value_or(0.0), pc.value_or(0.0), squeeze());
  return StateSpec::number(n, squeeze());
}

EvalOptions RunConfig::options() const {
  EvalOptions options;
  if (flip_width_sign) options.width_sign = WidthSign::Flipped;
  return options;
}

void check(const RunConfig& config) {
  (void)config.params();
  (void)config.squeeze();
  if (config.n < 0 || config.n > kMaxHermiteOrder) throw UsageError("n", "must lie in [0, 32]");
  if (config.qc && !std::isfinite(*config.qc)) throw UsageError("qc", "must be finite");
  if (config.pc && !std::isfinite(*config.pc)) throw UsageError("pc", "must be finite");
  if (!std::isfinite(config.t0)) throw UsageError("t0", "must be finite");
  if (!std::isfinite(config.t1) || config.t1 < config.t0) throw UsageError("t1", "must be finite and >= t0");
  if (config.nt < 1) throw UsageError("nt", "must be >= 1");
  if (config.nt > 1 && config.t1 == config.t0) throw UsageError("t1", "must exceed t0 when nt > 1");
  if (config.grid_points < 1 || config.grid_points > oracle::kMaxGridPoints) {
    throw UsageError("grid-points", "must lie in [1, 1048577]");
  }
}

}  // namespace ckosc::cli
