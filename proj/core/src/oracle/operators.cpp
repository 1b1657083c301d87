#include "ckosc/oracle/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ckosc/errors.hpp"
#include "ckosc/oracle/quadrature.hpp"

namespace ckosc::oracle {

namespace {

constexpr complex kI{0.0, 1.0};

template <std::size_t N>
std::vector<complex> stencil(std::span<const complex> f, const std::array<double, N>& weights, double scale) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  constexpr auto half = static_cast<std::ptrdiff_t>(N / 2);
  std::vector<complex> out(f.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    complex acc{};
    for (std::ptrdiff_t k = -half; k <= half; ++k) {
      const std::ptrdiff_t j = i + k;
      if (j >= 0 && j < n) acc += weights[static_cast<std::size_t>(k + half)] * f[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = acc * scale;
  }
  return out;
}

void check_size(std::span<const complex> samples, const GridSpec& grid) {
  if (samples.size() != static_cast<std::size_t>(grid.n_points)) {
    throw InvalidArgument("sample count does not match grid");
  }
}

// (i / sqrt hbar) [c_p (-i hbar d/dq) + c_q q] psi with c_p, c_q supplied by the caller.
std::vector<complex> linear_operator(complex coeff_p, complex coeff_q, double hbar, std::span<const complex> samples,
                                     const GridSpec& grid) {
  check_size(samples, grid);
  const auto derivative = first_derivative(samples, grid.dq);
  std::vector<complex> out(samples.size());
  const complex prefactor = kI / std::sqrt(hbar);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double q = grid.at(static_cast<int>(i));
    out[i] = prefactor * (coeff_p * complex(0.0, -hbar) * derivative[i] + coeff_q * q * samples[i]);
  }
  return out;
}

}  // namespace

std::vector<complex> first_derivative(std::span<const complex> f, double h) {
  return stencil<5>(f, {1.0, -8.0, 0.0, 8.0, -1.0}, 1.0 / (12.0 * h));
}

std::vector<complex> second_derivative(std::span<const complex> f, double h) {
  return stencil<5>(f, {-1.0, 16.0, -30.0, 16.0, -1.0}, 1.0 / (12.0 * h * h));
}

std::vector<complex> apply_annihilation(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                                        std::span<const complex> samples, const GridSpec& grid) {
  const ModeValue mode = mode_u_rphi(params, squeeze, t);
  return linear_operator(std::conj(mode.u), -params.mass(t) * std::conj(mode.udot), params.hbar(), samples, grid);
}

std::vector<complex> apply_creation(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                                    std::span<const complex> samples, const GridSpec& grid) {
  const ModeValue mode = mode_u_rphi(params, squeeze, t);
  // -(i/sqrt hbar)[u p - M u' q] = (i/sqrt hbar)[-u p + M u' q]
  return linear_operator(-mode.u, params.mass(t) * mode.udot, params.hbar(), samples, grid);
}

std::vector<complex> apply_hamiltonian(const PhysicalParams& params, double t, std::span<const complex> samples,
                                       const GridSpec& grid) {
  check_size(samples, grid);
  const double mass = params.mass(t);
  const double hbar = params.hbar();
  const double spring = 0.5 * mass * params.omega0() * params.omega0();
  auto out = second_derivative(samples, grid.dq);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double q = grid.at(static_cast<int>(i));
    out[i] = -hbar * hbar / (2.0 * mass) * out[i] + spring * q * q * samples[i];
  }
  return out;
}

double schrodinger_residual(const PhysicalParams& params, const StateSpec& spec, double t, const GridSpec& grid,
                            const EvalOptions& options) {
  EvalOptions continuous = options;
  continuous.branch = PhaseBranch::Continuous;
  const auto positions = grid.positions();
  auto at_time = [&](double s) {
    return sample_state(params, advance(params, spec, t, s), s, positions, continuous);
  };

  const double step = kResidualRelativeStep * std::max(std::abs(t), 1.0 / params.omega());
  auto central = [&](double h) {
    const auto f_m2 = at_time(t - 2.0 * h);
    const auto f_m1 = at_time(t - h);
    const auto f_p1 = at_time(t + h);
    const auto f_p2 = at_time(t + 2.0 * h);
    std::vector<complex> d(positions.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = (f_m2[i] - 8.0 * f_m1[i] + 8.0 * f_p1[i] - f_p2[i]) / (12.0 * h);
    }
    return d;
  };
  const auto coarse = central(step);
  const auto fine = central(0.5 * step);

  const auto psi = at_time(t);
  const auto h_psi = apply_hamiltonian(params, t, psi, grid);
  std::vector<complex> residual(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const complex dt_psi = (16.0 * fine[i] - coarse[i]) / 15.0;
    residual[i] = complex(0.0, params.hbar()) * dt_psi - h_psi[i];
  }
  return l2_norm(residual, grid.dq) / l2_norm(h_psi, grid.dq);
}

}  // namespace ckosc::oracle
