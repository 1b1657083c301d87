#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ckosc/modes.hpp"

namespace ckosc {

inline constexpr int kMaxHermiteOrder = 32;

/// Physicists' Hermite polynomial H_n(x) by upward three-term recurrence, 0 <= n <= 32.
double hermite(int n, double x);

/// Sign of the complex Gaussian width.
///
/// Normalizable: B = -i M u'* / (2 hbar u*), Re B = A^2/2 > 0.
/// Flipped: the opposite sign, which is not normalizable; kept as a negative control.
enum class WidthSign { Normalizable, Flipped };

/// Phase convention for the coherent-state prefactor F.
///
/// Exact: F = exp(-i p_c q_c / 2 hbar), the factor obtained by summing
/// alpha^n / sqrt(n!) Psi_n. QuadraticForm: the closed form
/// exp[i (u*^2 p_c^2 - 2 u'* u* p_c q_c) / (2 hbar u'* u*)], which is not unimodular.
enum class CoherentPhase { Exact, QuadraticForm };

/// Branch of Theta = -arg u_{r phi}.
///
/// Principal wraps to (-pi, pi]; Continuous is the lift omega t - arg(cosh r + sinh r e^{i(2 omega t + phi)}),
/// which is what the time-dependent Schrodinger equation needs for the half-integer phase.
enum class PhaseBranch { Principal, Continuous };

struct EvalOptions {
  WidthSign width_sign = WidthSign::Normalizable;
  CoherentPhase coherent_phase = CoherentPhase::Exact;
  PhaseBranch branch = PhaseBranch::Principal;
};

/// Gaussian shape of the squeezed family at time t: Psi ~ H_n(A q) e^{-B q^2} e^{-i Theta (n + 1/2)}.
struct GaussCoeffs {
  double A = 0.0;
  complex B;
  double Theta = 0.0;
  double t = 0.0;
};

GaussCoeffs gauss_coeffs(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                         const EvalOptions& options = {});

struct NumberState {
  int n = 0;
};

/// Coherent state labelled by its position and momentum expectation values (at the evaluation time).
struct CoherentState {
  double qc = 0.0;
  double pc = 0.0;
};

struct StateSpec {
  std::variant<NumberState, CoherentState> kind;
  SqueezeParams squeeze;

  static StateSpec number(int n, SqueezeParams squeeze = {});
  static StateSpec coherent(double qc, double pc, SqueezeParams squeeze = {});

  bool is_number() const noexcept { return std::holds_alternative<NumberState>(kind); }
  bool is_coherent() const noexcept { return std::holds_alternative<CoherentState>(kind); }
};

struct WaveSample {
  double q = 0.0;
  complex psi;
};

/// Squeezed number state Psi_n(q, t, r, phi). Throws InvalidArgument if spec is not a number state
/// or n is outside [0, 32].
complex eval_number_state(const PhysicalParams& params, const StateSpec& spec, double t, double q,
                          const EvalOptions& options = {});

/// Coherent state built on the squeezed ground state. Throws InvalidArgument if spec is not coherent,
/// SingularPhase if the quadratic-form phase is requested where u'* u* vanishes.
complex eval_coherent_state(const PhysicalParams& params, const StateSpec& spec, double t, double q,
                            const EvalOptions& options = {});

/// Dispatches on the state kind.
complex evaluate(const PhysicalParams& params, const StateSpec& spec, double t, double q,
                 const EvalOptions& options = {});

/// Evaluates the state on a set of positions, sharing the Gaussian coefficients.
std::vector<complex> sample_state(const PhysicalParams& params, const StateSpec& spec, double t,
                                  std::span<const double> positions, const EvalOptions& options = {});

struct PhasePoint {
  double qc = 0.0;
  double pc = 0.0;
};

/// Classical phase-space point q_c = sqrt(hbar)(alpha u + c.c.), p_c = sqrt(hbar) M (alpha u' + c.c.).
PhasePoint coherent_trajectory(const PhysicalParams& params, const SqueezeParams& squeeze, complex alpha,
                               double t);

/// Eigenvalue alpha of a_{r phi}(t) for the coherent state centred at (qc, pc) at time t.
complex coherent_alpha(const PhysicalParams& params, const SqueezeParams& squeeze, PhasePoint point,
                       double t);

/// The same physical state, relabelled at time t_to: number states are unchanged, coherent
/// states move along their classical trajectory.
StateSpec advance(const PhysicalParams& params, const StateSpec& spec, double t_from, double t_to);

}  // namespace ckosc
