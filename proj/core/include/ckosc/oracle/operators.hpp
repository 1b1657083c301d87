#pragma once

#include <span>
#include <vector>

#include "ckosc/modes.hpp"
#include "ckosc/oracle/grid.hpp"
#include "ckosc/states.hpp"

namespace ckosc::oracle {

// Fourth-order central differences; samples outside the grid are taken as zero (Dirichlet).
std::vector<complex> first_derivative(std::span<const complex> f, double h);
std::vector<complex> second_derivative(std::span<const complex> f, double h);

/// a_{r phi}(t) psi = (i / sqrt hbar) [u* (-i hbar d/dq) - M u'* q] psi.
std::vector<complex> apply_annihilation(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                                        std::span<const complex> samples, const GridSpec& grid);

/// a^dagger_{r phi}(t) psi = -(i / sqrt hbar) [u (-i hbar d/dq) - M u' q] psi.
std::vector<complex> apply_creation(const PhysicalParams& params, const SqueezeParams& squeeze, double t,
                                    std::span<const complex> samples, const GridSpec& grid);

/// H(t) psi with the fourth-order kinetic stencil.
std::vector<complex> apply_hamiltonian(const PhysicalParams& params, double t, std::span<const complex> samples,
                                       const GridSpec& grid);

inline constexpr double kResidualRelativeStep = 1e-4;

/// ||i hbar d_t Psi - H Psi|| / ||H Psi|| for the analytic state at time t.
///
/// d_t uses a fourth-order central stencil with step 1e-4 max(|t|, 1/omega), Richardson-extrapolated once.
/// The continuous branch of Theta is always used; other evaluation options pass through.
double schrodinger_residual(const PhysicalParams& params, const StateSpec& spec, double t, const GridSpec& grid,
                            const EvalOptions& options = {});

}  // namespace ckosc::oracle
