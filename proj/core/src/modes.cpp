#include "ckosc/modes.hpp"

#include <cmath>
#include <string>

#include "ckosc/errors.hpp"

namespace ckosc {

namespace {

// Antisymmetric form M (f g' - f' g); constant in time for any two solutions of the mode equation.
complex symplectic(double mass, complex f, complex fdot, complex g, complex gdot) {
  return mass * (f * gdot - fdot * g);
}

double wrap_two_pi(double phi) {
  double w = std::fmod(phi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

// Distance of the t = 0 Gaussian from the undamped ground-state form.
double undamped_mismatch(const PhysicalParams& params, const SqueezeParams& squeeze) {
  const ModeValue mode = mode_u_rphi(params, squeeze, 0.0);
  const double hbar = params.hbar();
  const double width = 1.0 / std::sqrt(2.0 * hbar * std::norm(mode.u));
  const complex chirp = complex(0.0, -1.0) * params.m0() * std::conj(mode.udot) / (2.0 * hbar * std::conj(mode.u));
  const double target = std::sqrt(params.m0() * params.omega() / hbar);
  return std::abs(width / target - 1.0) + std::abs(chirp.imag()) / chirp.real();
}

}  // namespace

double PhysicalParams::mass(double t) const noexcept { return m0_ * std::exp(gamma_ * t); }

PhysicalParams make_params(double m0, double gamma, double omega0, double hbar) {
  if (!(m0 > 0.0) || !std::isfinite(m0)) throw InvalidArgument("m0 must be positive and finite");
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw InvalidArgument("omega0 must be positive and finite");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidArgument("hbar must be positive and finite");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be non-negative and finite");
  if (gamma >= 2.0 * omega0) {
    throw NotUnderdamped("gamma = " + std::to_string(gamma) + " >= 2 omega0 = " + std::to_string(2.0 * omega0));
  }
  // (omega0 - gamma/2)(omega0 + gamma/2) avoids cancellation near the critical point.
  const double omega = std::sqrt((omega0 - 0.5 * gamma) * (omega0 + 0.5 * gamma));
  return PhysicalParams(m0, gamma, omega0, hbar, omega);
}

SqueezeParams::SqueezeParams(double r, double phi) : r_(r), phi_(0.0) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument("squeeze r must be non-negative and finite");
  if (!std::isfinite(phi)) throw InvalidArgument("squeeze phi must be finite");
  phi_ = wrap_two_pi(phi);
}

complex SqueezeParams::mu() const { return {std::cosh(r_), 0.0}; }

complex SqueezeParams::nu() const { return std::polar(std::sinh(r_), phi_); }

complex wronskian(const PhysicalParams& params, const ModeValue& mode) {
  return symplectic(params.mass(mode.t), mode.u, mode.udot, std::conj(mode.u), std::conj(mode.udot));
}

ModeValue mode_u0(const PhysicalParams& params, double t) {
  const double w = params.omega();
  const double amplitude = std::exp(-0.5 * params.gamma() * t) / std::sqrt(2.0 * params.m0() * w);
  const complex u = std::polar(amplitude, -w * t);
  return {u, complex(-0.5 * params.gamma(), -w) * u, t};
}

ModeValue mode_u_rphi(const PhysicalParams& params, const SqueezeParams& squeeze, double t) {
  const ModeValue base = mode_u0(params, t);
  const complex mu = squeeze.mu();
  const complex nu = squeeze.nu();
  return {mu * base.u + nu * std::conj(base.u), mu * base.udot + nu * std::conj(base.udot), t};
}

BogoliubovPair bogoliubov_from_mode(const PhysicalParams& params, const ModeValue& mode) {
  const ModeValue base = mode_u0(params, mode.t);
  const double mass = params.mass(mode.t);
  const complex with_conj = symplectic(mass, mode.u, mode.udot, std::conj(base.u), std::conj(base.udot));
  const complex with_base = symplectic(mass, mode.u, mode.udot, base.u, base.udot);
  return {complex(0.0, -1.0) * with_conj, complex(0.0, 1.0) * with_base};
}

SqueezeParams squeeze_from_mode(const PhysicalParams& params, const ModeValue& mode) {
  const complex w = wronskian(params, mode);
  const double deviation = std::abs(w - complex(0.0, 1.0));
  if (!(deviation <= kExternalWronskianTol)) {
    throw WronskianViolation("mode Wronskian deviates from i by " + std::to_string(deviation));
  }
  const BogoliubovPair pair = bogoliubov_from_mode(params, mode);
  const double abs_mu = std::abs(pair.mu);
  const double abs_nu = std::abs(pair.nu);
  // |nu| / |mu| = tanh r is better conditioned than asinh |nu| for an inexact pair.
  const double r = std::atanh(abs_nu / abs_mu);
  if (abs_nu <= 1e-14 * abs_mu) return SqueezeParams(0.0, 0.0);
  return SqueezeParams(r, std::arg(pair.nu) - std::arg(pair.mu));
}

SpecialSqueeze special_squeeze(const PhysicalParams& params) {
  const double gamma = params.gamma();
  if (!(gamma > 0.0)) throw InvalidArgument("special squeeze requires gamma > 0 (phi0 undefined at zero damping)");
  const double w = params.omega();
  const double ratio = gamma * gamma / (8.0 * w * w);
  // cosh 2r0 = 1 + ratio  =>  2 r0 = log(1 + ratio + sqrt(ratio (2 + ratio))).
  const double r0 = 0.5 * std::log1p(ratio + std::sqrt(ratio * (2.0 + ratio)));
  const double principal = std::atan(4.0 * w / gamma);

  const SqueezeParams first(r0, principal);
  const SqueezeParams second(r0, principal + kPi);
  const double first_mismatch = undamped_mismatch(params, first);
  const double second_mismatch = undamped_mismatch(params, second);
  if (first_mismatch <= second_mismatch) return {first, false, second_mismatch};
  return {second, true, first_mismatch};
}

}  // namespace ckosc
