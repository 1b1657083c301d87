#pragma once

#include <vector>

#include "ckosc/modes.hpp"
#include "ckosc/states.hpp"

namespace ckosc::oracle {

inline constexpr int kMinGridPoints = 513;
inline constexpr int kDefaultGridPoints = 4097;
inline constexpr int kMaxGridPoints = (1 << 20) + 1;
/// Largest phase advance per grid step, |k| dq, inside the resolved region of a state.
inline constexpr double kMaxPhaseStep = 0.03;
/// The resolved region: this many spreads of |Psi|^2 around its centre.
inline constexpr double kResolvedSpreads = 6.0;

/// Uniform position grid with an odd number of points (composite Simpson needs an even number of panels).
struct GridSpec {
  double q_min = 0.0;
  double q_max = 0.0;
  int n_points = 0;
  double dq = 0.0;

  double at(int i) const noexcept { return q_min + i * dq; }
  std::vector<double> positions() const;
};

/// Grid of n_points (clamped to >= 513 and rounded up to 2^k + 1) over [q_min, q_max].
GridSpec make_uniform_grid(double q_min, double q_max, int n_points = kDefaultGridPoints);

/// Grid centred on <q> of the state at time t, covering 10 standard deviations of |Psi|^2 on each side.
///
/// For a number state the spread is sqrt(n + 1/2) / A, so n = 0 gives the half-width 10 / (A sqrt 2);
/// a coherent state uses max(10 / (A sqrt 2), |qc| + 10 / (A sqrt 2)).
///
/// n_points is a floor: chirped or boosted states get enough points that the local wavenumber
/// (Gaussian chirp, Hermite oscillation and momentum boost) advances by at most kMaxPhaseStep per step.
GridSpec make_grid(const PhysicalParams& params, const StateSpec& spec, double t, int n_points = kDefaultGridPoints);

}  // namespace ckosc::oracle
