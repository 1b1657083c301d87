#include "ckosc/observables.hpp"

#include <cmath>

#include "ckosc/errors.hpp"

namespace ckosc {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxHermiteOrder) throw InvalidArgument("state index n outside supported range [0, 32]");
}

double sec_half(const AngleGamma& angle) { return 1.0 / std::cos(0.5 * angle.theta); }

// Squeeze-dependent factor under the square root of the uncertainty product.
double squeeze_factor(const PhysicalParams& params, const SqueezeParams& squeeze, const AngleGamma& angle,
                      double t) {
  const double c = std::cosh(2.0 * squeeze.r());
  const double s = std::sinh(2.0 * squeeze.r());
  const double x = 2.0 * params.omega() * t + squeeze.phi();
  return std::sqrt((c + s * std::cos(x)) * (c - s * std::cos(x + angle.theta)));
}

}  // namespace

AngleGamma theta_gamma(const PhysicalParams& params) {
  const double x = params.gamma() / params.omega();
  const double quarter = 0.25 * x * x;
  AngleGamma angle;
  angle.sin_theta = x / (1.0 + quarter);
  angle.cos_theta = (1.0 - quarter) / (1.0 + quarter);
  angle.theta = std::atan2(angle.sin_theta, angle.cos_theta);
  return angle;
}

Sigma0Forms sigma0_forms(const PhysicalParams& params) {
  const double half = 0.5 * params.gamma() / params.omega0();
  return {sec_half(theta_gamma(params)), 1.0 / std::sqrt((1.0 - half) * (1.0 + half))};
}

double sigma0(const PhysicalParams& params) { return sigma0_forms(params).from_ratio; }

SecondMoments number_state_moments(const PhysicalParams& params, int n, const SqueezeParams& squeeze, double t) {
  check_order(n);
  const ModeValue mode = mode_u_rphi(params, squeeze, t);
  const double level = 2.0 * n + 1.0;
  const double mass = params.mass(t);
  return {params.hbar() * std::norm(mode.u) * level, params.hbar() * mass * mass * std::norm(mode.udot) * level};
}

UncertaintyRecord uncertainty_product(const PhysicalParams& params, int n, const SqueezeParams& squeeze, double t) {
  const SecondMoments moments = number_state_moments(params, n, squeeze, t);
  const AngleGamma angle = theta_gamma(params);
  UncertaintyRecord record;
  record.t = t;
  record.dq = std::sqrt(moments.q2);
  record.dp = std::sqrt(moments.p2);
  record.product = 0.5 * params.hbar() * sec_half(angle) * squeeze_factor(params, squeeze, angle, t) * (2.0 * n + 1.0);
  record.bound = 0.5 * params.hbar() * sigma0(params);
  return record;
}

double uncertainty_product_undamped_form(const PhysicalParams& params, int n, const SqueezeParams& squeeze,
                                         double t) {
  check_order(n);
  const double c = std::cosh(2.0 * squeeze.r());
  const double s = std::sinh(2.0 * squeeze.r());
  const double cx = std::cos(2.0 * params.omega() * t + squeeze.phi());
  return 0.5 * params.hbar() * std::sqrt(c * c - s * s * cx * cx) * (2.0 * n + 1.0);
}

TimeAverage uncertainty_time_avg(const PhysicalParams& params, int n, const SqueezeParams& squeeze, int samples) {
  check_order(n);
  if (samples < 2) throw InvalidArgument("time average needs at least 2 samples");
  const AngleGamma angle = theta_gamma(params);
  const double period = kPi / params.omega();
  // Periodic integrand: the trapezoid rule over a full period is the plain sample mean.
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) sum += squeeze_factor(params, squeeze, angle, period * k / samples);

  TimeAverage average;
  average.samples = samples;
  average.numeric = 0.5 * params.hbar() * sec_half(angle) * (sum / samples) * (2.0 * n + 1.0);
  if (n == 0) {
    const double ch = std::cosh(squeeze.r());
    const double sh = std::sinh(squeeze.r());
    average.closed_form = 0.5 * params.hbar() * sec_half(angle) * (ch * ch - 0.5 * angle.cos_theta * sh * sh);
  }
  return average;
}

double hamiltonian_expectation(const PhysicalParams& params, int n, const SqueezeParams& squeeze, double t) {
  check_order(n);
  const AngleGamma angle = theta_gamma(params);
  const double sec = sec_half(angle);
  const double half = 0.5 * angle.theta;
  const double bracket = std::cosh(2.0 * squeeze.r()) +
                         std::sinh(2.0 * squeeze.r()) * std::sin(half) *
                             std::sin(2.0 * params.omega() * t + squeeze.phi() + half);
  return params.hbar() * params.omega() * sec * sec * bracket * (n + 0.5);
}

double hamiltonian_time_avg(const PhysicalParams& params, int n, const SqueezeParams& squeeze) {
  check_order(n);
  const double sec = sec_half(theta_gamma(params));
  return params.hbar() * params.omega() * sec * sec * std::cosh(2.0 * squeeze.r()) * (n + 0.5);
}

double coherent_hamiltonian_expectation(const PhysicalParams& params, const SqueezeParams& squeeze,
                                        PhasePoint point, double t) {
  const double mass = params.mass(t);
  const double w0 = params.omega0();
  const double classical = point.pc * point.pc / (2.0 * mass) + 0.5 * mass * w0 * w0 * point.qc * point.qc;
  return classical + hamiltonian_expectation(params, 0, squeeze, t);
}

}  // namespace ckosc
