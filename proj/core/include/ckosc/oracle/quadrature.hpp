#pragma once

#include <span>
#include <string>

#include "ckosc/modes.hpp"
#include "ckosc/oracle/grid.hpp"

namespace ckosc::oracle {

/// Composite Simpson rule on a uniform grid with an odd number of samples.
double simpson(std::span<const double> values, double h);
complex simpson(std::span<const complex> values, double h);

/// <f|g> by Simpson quadrature.
complex inner_product(std::span<const complex> f, std::span<const complex> g, double h);
double l2_norm(std::span<const complex> f, double h);

/// Expectation values of a sampled wave function, not divided by the norm.
struct Moments {
  double norm = 0.0;
  double q = 0.0;
  double q2 = 0.0;
  double p = 0.0;
  double p2 = 0.0;
  double energy = 0.0;  ///< e^{-gamma t} <p^2> / 2 m0 + m0 omega0^2 e^{gamma t} <q^2> / 2
  std::string warning;  ///< non-empty when |norm - 1| > 1e-6

  double var_q() const noexcept { return q2 - q * q; }
  double var_p() const noexcept { return p2 - p * p; }
};

/// Position moments by Simpson quadrature, momentum moments via <p^k> = int Psi* (-i hbar d/dq)^k Psi
/// with fourth-order central differences.
Moments moments(std::span<const complex> samples, const GridSpec& grid, const PhysicalParams& params, double t);

}  // namespace ckosc::oracle
