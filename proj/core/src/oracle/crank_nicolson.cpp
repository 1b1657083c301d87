#include "ckosc/oracle/crank_nicolson.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ckosc/errors.hpp"

namespace ckosc::oracle {

namespace {

constexpr complex kI{0.0, 1.0};

double boundary_mass(std::span<const complex> psi, double h) {
  const std::size_t n = psi.size();
  const auto band = static_cast<std::size_t>(kBoundaryBand);
  double mass = 0.0;
  for (std::size_t i = 0; i < band && i < n; ++i) mass += std::norm(psi[i]) + std::norm(psi[n - 1 - i]);
  return mass * h;
}

}  // namespace

double discrete_norm(std::span<const complex> samples, double h) {
  double sum = 0.0;
  for (const complex& v : samples) sum += std::norm(v);
  return sum * h;
}

EvolutionResult crank_nicolson_evolve(const PhysicalParams& params, std::span<const complex> initial,
                                      const GridSpec& grid, double t0, double t1, int n_steps) {
  if (n_steps < 1) throw InvalidArgument("Crank-Nicolson needs at least one step");
  if (initial.size() != static_cast<std::size_t>(grid.n_points)) {
    throw InvalidArgument("sample count does not match grid");
  }
  const std::size_t n = initial.size();
  const double h = grid.dq;
  const double hbar = params.hbar();
  const double dt = (t1 - t0) / n_steps;

  EvolutionResult result;
  result.samples.assign(initial.begin(), initial.end());
  result.initial_norm = discrete_norm(initial, h);
  result.max_boundary_mass = boundary_mass(initial, h);

  std::vector<double> potential_shape(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = grid.at(static_cast<int>(i));
    potential_shape[i] = 0.5 * params.m0() * params.omega0() * params.omega0() * q * q;
  }

  std::vector<complex> rhs(n);
  std::vector<complex> diag(n);
  std::vector<complex> c_prime(n);
  auto& psi = result.samples;

  for (int step = 0; step < n_steps; ++step) {
    const double t_mid = t0 + (step + 0.5) * dt;
    const double growth = std::exp(params.gamma() * t_mid);
    // H = -kinetic (psi[i-1] - 2 psi[i] + psi[i+1]) + V_i psi[i]
    const double kinetic = hbar * hbar / (2.0 * params.m0() * growth * h * h);
    const complex factor = kI * dt / (2.0 * hbar);
    const complex off = -factor * kinetic;  // off-diagonal of (1 + i dt H / 2 hbar)

    for (std::size_t i = 0; i < n; ++i) {
      const complex h_diag = 2.0 * kinetic + potential_shape[i] * growth;
      complex h_psi = h_diag * psi[i];
      if (i > 0) h_psi -= kinetic * psi[i - 1];
      if (i + 1 < n) h_psi -= kinetic * psi[i + 1];
      rhs[i] = psi[i] - factor * h_psi;
      diag[i] = 1.0 + factor * h_diag;
    }

    // Thomas algorithm; the symmetric off-diagonal is constant.
    c_prime[0] = off / diag[0];
    rhs[0] /= diag[0];
    for (std::size_t i = 1; i < n; ++i) {
      const complex inverse = 1.0 / (diag[i] - off * c_prime[i - 1]);
      c_prime[i] = off * inverse;
      rhs[i] = (rhs[i] - off * rhs[i - 1]) * inverse;
    }
    psi[n - 1] = rhs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) psi[i] = rhs[i] - c_prime[i] * psi[i + 1];

    const double edge = boundary_mass(psi, h);
    result.max_boundary_mass = std::max(result.max_boundary_mass, edge);
    if (edge > kBoundaryLeakMass) {
      throw BoundaryLeak("boundary mass " + std::to_string(edge) + " after step " + std::to_string(step + 1));
    }
  }
  result.final_norm = discrete_norm(psi, h);
  return result;
}

}  // namespace ckosc::oracle
