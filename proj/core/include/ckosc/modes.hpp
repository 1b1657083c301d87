#pragma once

#include <complex>

namespace ckosc {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Oscillator constants of H(t) = e^{-gamma t} p^2 / 2 m0 + m0 omega0^2 e^{gamma t} q^2 / 2.
///
/// Constructed only through make_params, which enforces the underdamped
/// regime and computes the shifted frequency omega = sqrt(omega0^2 - gamma^2/4) once.
class PhysicalParams {
 public:
  double m0() const noexcept { return m0_; }
  double gamma() const noexcept { return gamma_; }
  double omega0() const noexcept { return omega0_; }
  double hbar() const noexcept { return hbar_; }
  double omega() const noexcept { return omega_; }

  /// Time-dependent mass m0 e^{gamma t}.
  double mass(double t) const noexcept;

  friend PhysicalParams make_params(double m0, double gamma, double omega0, double hbar);

 private:
  PhysicalParams(double m0, double gamma, double omega0, double hbar, double omega)
      : m0_(m0), gamma_(gamma), omega0_(omega0), hbar_(hbar), omega_(omega) {}

  double m0_;
  double gamma_;
  double omega0_;
  double hbar_;
  double omega_;
};

/// Throws InvalidArgument for non-positive m0/omega0/hbar or negative gamma,
/// NotUnderdamped for gamma >= 2 omega0.
PhysicalParams make_params(double m0, double gamma, double omega0, double hbar);

/// Squeeze magnitude r >= 0 and phase phi in [0, 2 pi).
///
/// The Bogoliubov pair is mu = cosh r, nu = e^{i phi} sinh r.
class SqueezeParams {
 public:
  SqueezeParams() = default;
  /// Throws InvalidArgument for negative or non-finite r; phi is reduced mod 2 pi.
  SqueezeParams(double r, double phi);

  double r() const noexcept { return r_; }
  double phi() const noexcept { return phi_; }
  complex mu() const;
  complex nu() const;

 private:
  double r_ = 0.0;
  double phi_ = 0.0;
};

/// Complex classical solution u(t) of u'' + gamma u' + omega0^2 u = 0 and its derivative.
struct ModeValue {
  complex u;
  complex udot;
  double t = 0.0;
};

/// m0 e^{gamma t} (u u'* - u* u'); equals i for a canonically normalized mode.
complex wronskian(const PhysicalParams& params, const ModeValue& mode);

/// u0(t) = e^{-gamma t/2} e^{-i omega t} / sqrt(2 m0 omega).
ModeValue mode_u0(const PhysicalParams& params, double t);

/// u_{r phi} = cosh r u0 + e^{i phi} sinh r u0*.
ModeValue mode_u_rphi(const PhysicalParams& params, const SqueezeParams& squeeze, double t);

/// Wronskian tolerance for externally supplied modes.
inline constexpr double kExternalWronskianTol = 1e-8;

/// Inverse of mode_u_rphi modulo the unobservable overall phase (gauge: mu real positive).
/// Throws WronskianViolation when |W - i| exceeds kExternalWronskianTol.
SqueezeParams squeeze_from_mode(const PhysicalParams& params, const ModeValue& mode);

/// Bogoliubov pair (mu, nu) of a mode in the u0 basis, before any gauge fixing.
struct BogoliubovPair {
  complex mu;
  complex nu;
};
BogoliubovPair bogoliubov_from_mode(const PhysicalParams& params, const ModeValue& mode);

/// Squeeze (r0, phi0) for which the number states reduce at t = 0 to the
/// undamped oscillator eigenfunctions with frequency omega, up to a constant phase.
///
/// cosh 2 r0 = 1 + gamma^2 / 8 omega^2 and tan phi0 = 4 omega / gamma. The
/// tangent leaves a two-fold ambiguity; the branch whose Gaussian width and
/// chirp match the undamped form at t = 0 is returned. Throws InvalidArgument
/// for gamma = 0.
struct SpecialSqueeze {
  SqueezeParams squeeze;
  /// true when the (0, pi/2) candidate failed and phi0 + pi was selected.
  bool branch_shifted = false;
  /// Mismatch of the rejected candidate, |A(0)/sqrt(m0 omega/hbar) - 1| + |Im B(0)| / Re B(0).
  double rejected_mismatch = 0.0;
};
SpecialSqueeze special_squeeze(const PhysicalParams& params);

}  // namespace ckosc
