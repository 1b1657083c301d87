#pragma once

#include <span>
#include <vector>

#include "ckosc/modes.hpp"
#include "ckosc/oracle/grid.hpp"

namespace ckosc::oracle {

/// Probability mass within this many points of either edge that triggers BoundaryLeak.
inline constexpr int kBoundaryBand = 5;
inline constexpr double kBoundaryLeakMass = 1e-8;

struct EvolutionResult {
  std::vector<complex> samples;
  double initial_norm = 0.0;  ///< discrete sum |psi|^2 dq
  double final_norm = 0.0;
  double max_boundary_mass = 0.0;
};

/// Crank-Nicolson propagation of i hbar d_t psi = [e^{-gamma t} p^2 / 2 m0 + m0 omega0^2 e^{gamma t} q^2 / 2] psi
/// from t0 to t1 in n_steps equal steps.
///
/// Kinetic term by the three-point Laplacian with Dirichlet zero boundaries; the Hamiltonian is frozen at
/// the mid-step time, so each step is the Cayley transform of a Hermitian tridiagonal matrix and preserves
/// the discrete norm to rounding. Throws BoundaryLeak when more than 1e-8 of the mass sits within
/// 5 points of an edge after any step, InvalidArgument for n_steps < 1.
EvolutionResult crank_nicolson_evolve(const PhysicalParams& params, std::span<const complex> initial,
                                      const GridSpec& grid, double t0, double t1, int n_steps);

/// Sum of |psi|^2 dq over the grid (the norm Crank-Nicolson conserves exactly).
double discrete_norm(std::span<const complex> samples, double h);

}  // namespace ckosc::oracle
