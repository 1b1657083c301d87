#include "ckosc/states.hpp"

#include <cmath>
#include <string>

#include "ckosc/errors.hpp"

namespace ckosc {

namespace {

constexpr complex kI{0.0, 1.0};

void check_order(int n) {
  if (n < 0 || n > kMaxHermiteOrder) {
    throw InvalidArgument("state index n = " + std::to_string(n) + " outside supported range [0, 32]");
  }
}

// (2^n n!)^{-1/2}
double hermite_norm(int n) {
  double value = 1.0;
  for (int k = 1; k <= n; ++k) value /= std::sqrt(2.0 * k);
  return value;
}

// Gaussian ground-state envelope shared by number and coherent states.
struct Prefactors {
  GaussCoeffs coeffs;
  double amplitude;  // (A / sqrt(pi))^{1/2}
};

Prefactors prefactors(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                      const EvalOptions& options) {
  Prefactors pre{gauss_coeffs(params, squeeze, t, options), 0.0};
  pre.amplitude = std::sqrt(pre.coeffs.A / std::sqrt(kPi));
  return pre;
}

complex number_value(const Prefactors& pre, int n, double norm, double q) {
  const complex phase = std::polar(1.0, -pre.coeffs.Theta * (n + 0.5));
  return norm * pre.amplitude * phase * hermite(n, pre.coeffs.A * q) * std::exp(-pre.coeffs.B * q * q);
}

// Position-independent factor F e^{-i Theta/2} of the coherent state.
complex coherent_constant(const PhysicalParams& params, const SqueezeParams& squeeze, const Prefactors& pre,
                          const CoherentState& c, double t, const EvalOptions& options) {
  const double hbar = params.hbar();
  complex f;
  if (options.coherent_phase == CoherentPhase::Exact) {
    f = std::polar(1.0, -c.pc * c.qc / (2.0 * hbar));
  } else {
    const ModeValue mode = mode_u_rphi(params, squeeze, t);
    const complex us = std::conj(mode.u);
    const complex uds = std::conj(mode.udot);
    if (std::abs(uds) < 1e-6 * params.omega0() * std::abs(us)) {
      throw SingularPhase("u'* vanishes at t = " + std::to_string(t) + "; coherent phase factor undefined");
    }
    f = std::exp(kI / (2.0 * hbar * uds * us) * (us * us * c.pc * c.pc - 2.0 * uds * us * c.pc * c.qc));
  }
  return pre.amplitude * f * std::polar(1.0, -0.5 * pre.coeffs.Theta);
}

complex coherent_value(const Prefactors& pre, complex constant, const CoherentState& c, double hbar, double q) {
  const double shifted = q - c.qc;
  return constant * std::exp(-pre.coeffs.B * shifted * shifted + kI * (c.pc * q / hbar));
}

}  // namespace

double hermite(int n, double x) {
  check_order(n);
  if (n == 0) return 1.0;
  double previous = 1.0;
  double current = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

GaussCoeffs gauss_coeffs(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                         const EvalOptions& options) {
  const ModeValue mode = mode_u_rphi(params, squeeze, t);
  const double hbar = params.hbar();
  GaussCoeffs coeffs;
  coeffs.t = t;
  coeffs.A = 1.0 / std::sqrt(2.0 * hbar * std::norm(mode.u));
  coeffs.B = -kI * params.mass(t) * std::conj(mode.udot) / (2.0 * hbar * std::conj(mode.u));
  if (options.width_sign == WidthSign::Flipped) coeffs.B = -coeffs.B;

  // u = |u| e^{-i omega t} (cosh r + sinh r e^{i(2 omega t + phi)}); the bracket has positive real part.
  const double angle = 2.0 * params.omega() * t + squeeze.phi();
  const complex bracket = std::cosh(squeeze.r()) + std::polar(std::sinh(squeeze.r()), angle);
  const double continuous = params.omega() * t - std::arg(bracket);
  coeffs.Theta = options.branch == PhaseBranch::Continuous ? continuous : std::remainder(continuous, 2.0 * kPi);
  if (coeffs.Theta == -kPi) coeffs.Theta = kPi;
  return coeffs;
}

StateSpec StateSpec::number(int n, SqueezeParams squeeze) { return {NumberState{n}, squeeze}; }

StateSpec StateSpec::coherent(double qc, double pc, SqueezeParams squeeze) {
  return {CoherentState{qc, pc}, squeeze};
}

complex eval_number_state(const PhysicalParams& params, const StateSpec& spec, double t, double q,
                          const EvalOptions& options) {
  const auto* number = std::get_if<NumberState>(&spec.kind);
  if (number == nullptr) throw InvalidArgument("eval_number_state requires a number-state spec");
  check_order(number->n);
  const Prefactors pre = prefactors(params, spec.squeeze, t, options);
  return number_value(pre, number->n, hermite_norm(number->n), q);
}

complex eval_coherent_state(const PhysicalParams& params, const StateSpec& spec, double t, double q,
                            const EvalOptions& options) {
  const auto* coherent = std::get_if<CoherentState>(&spec.kind);
  if (coherent == nullptr) throw InvalidArgument("eval_coherent_state requires a coherent-state spec");
  const Prefactors pre = prefactors(params, spec.squeeze, t, options);
  const complex constant = coherent_constant(params, spec.squeeze, pre, *coherent, t, options);
  return coherent_value(pre, constant, *coherent, params.hbar(), q);
}

complex evaluate(const PhysicalParams& params, const StateSpec& spec, double t, double q,
                 const EvalOptions& options) {
  return spec.is_number() ? eval_number_state(params, spec, t, q, options)
                          : eval_coherent_state(params, spec, t, q, options);
}

std::vector<complex> sample_state(const PhysicalParams& params, const StateSpec& spec, double t,
                                  std::span<const double> positions, const EvalOptions& options) {
  std::vector<complex> values(positions.size());
  const Prefactors pre = prefactors(params, spec.squeeze, t, options);
  if (const auto* number = std::get_if<NumberState>(&spec.kind)) {
    check_order(number->n);
    const double norm = hermite_norm(number->n);
    for (std::size_t i = 0; i < positions.size(); ++i) values[i] = number_value(pre, number->n, norm, positions[i]);
  } else {
    const auto& coherent = std::get<CoherentState>(spec.kind);
    const complex constant = coherent_constant(params, spec.squeeze, pre, coherent, t, options);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      values[i] = coherent_value(pre, constant, coherent, params.hbar(), positions[i]);
    }
  }
  return values;
}

PhasePoint coherent_trajectory(const PhysicalParams& params, const SqueezeParams& squeeze, complex alpha,
                               double t) {
  const ModeValue mode = mode_u_rphi(params, squeeze, t);
  const double root_hbar = std::sqrt(params.hbar());
  // alpha u + (alpha u)* = 2 Re(alpha u)
  return {2.0 * root_hbar * (alpha * mode.u).real(), 2.0 * root_hbar * params.mass(t) * (alpha * mode.udot).real()};
}

complex coherent_alpha(const PhysicalParams& params, const SqueezeParams& squeeze, PhasePoint point, double t) {
  const ModeValue mode = mode_u_rphi(params, squeeze, t);
  return kI / std::sqrt(params.hbar()) *
         (std::conj(mode.u) * point.pc - params.mass(t) * std::conj(mode.udot) * point.qc);
}

StateSpec advance(const PhysicalParams& params, const StateSpec& spec, double t_from, double t_to) {
  const auto* coherent = std::get_if<CoherentState>(&spec.kind);
  if (coherent == nullptr) return spec;
  const complex alpha = coherent_alpha(params, spec.squeeze, {coherent->qc, coherent->pc}, t_from);
  const PhasePoint moved = coherent_trajectory(params, spec.squeeze, alpha, t_to);
  return StateSpec::coherent(moved.qc, moved.pc, spec.squeeze);
}

}  // namespace ckosc
