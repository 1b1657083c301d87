#pragma once

#include <optional>

#include "ckosc/modes.hpp"
#include "ckosc/states.hpp"

namespace ckosc {

/// Damping angle theta_gamma in [0, pi), with sec(theta/2) = omega0 / omega.
struct AngleGamma {
  double theta = 0.0;
  double sin_theta = 0.0;
  double cos_theta = 1.0;
};

AngleGamma theta_gamma(const PhysicalParams& params);

/// sigma0 = sec(theta_gamma/2) = (1 - gamma^2 / 4 omega0^2)^{-1/2} >= 1.
///
/// Returns the ratio form; sigma0_forms exposes both for cross-checking.
double sigma0(const PhysicalParams& params);

/// Both closed forms of sigma0, for reporting.
struct Sigma0Forms {
  double from_angle = 0.0;
  double from_ratio = 0.0;
};
Sigma0Forms sigma0_forms(const PhysicalParams& params);

struct UncertaintyRecord {
  double dq = 0.0;
  double dp = 0.0;
  double product = 0.0;  ///< closed form in theta_gamma
  double bound = 0.0;    ///< hbar sigma0 / 2
  double t = 0.0;
};

/// Uncertainty product of the squeezed number state |n, r, phi, t>.
///
/// product = (hbar/2) sec(theta/2) sqrt{[cosh 2r + sinh 2r cos x][cosh 2r - sinh 2r cos(x + theta)]} (2n + 1),
/// x = 2 omega t + phi; dq and dp come from <q^2> = hbar |u|^2 (2n+1), <p^2> = hbar M^2 |u'|^2 (2n+1).
UncertaintyRecord uncertainty_product(const PhysicalParams& params, int n, const SqueezeParams& squeeze, double t);

/// The zero-damping form (hbar/2) sqrt(cosh^2 2r - sinh^2 2r cos^2 x) (2n+1), any gamma plugged in for x.
double uncertainty_product_undamped_form(const PhysicalParams& params, int n, const SqueezeParams& squeeze,
                                         double t);

struct TimeAverage {
  double numeric = 0.0;
  /// (hbar/2) sec(theta/2) (cosh^2 r - (cos theta / 2) sinh^2 r); only defined for n = 0.
  std::optional<double> closed_form;
  int samples = 0;
};

inline constexpr int kTimeAverageSamples = 2048;

/// Average of the uncertainty product over one period pi/omega by the trapezoid rule.
TimeAverage uncertainty_time_avg(const PhysicalParams& params, int n, const SqueezeParams& squeeze,
                                 int samples = kTimeAverageSamples);

/// <H> = hbar omega sec^2(theta/2) [cosh 2r + sinh 2r sin(theta/2) sin(2 omega t + phi + theta/2)] (n + 1/2).
double hamiltonian_expectation(const PhysicalParams& params, int n, const SqueezeParams& squeeze, double t);

/// Period average of hamiltonian_expectation: hbar omega sec^2(theta/2) cosh 2r (n + 1/2).
double hamiltonian_time_avg(const PhysicalParams& params, int n, const SqueezeParams& squeeze);

/// <H> in a coherent state: classical energy of (qc, pc) plus the squeezed ground-state energy.
double coherent_hamiltonian_expectation(const PhysicalParams& params, const SqueezeParams& squeeze,
                                        PhasePoint point, double t);

/// Second moments <q^2>, <p^2> of a squeezed number state (about the mean).
struct SecondMoments {
  double q2 = 0.0;
  double p2 = 0.0;
};
SecondMoments number_state_moments(const PhysicalParams& params, int n, const SqueezeParams& squeeze, double t);

}  // namespace ckosc
