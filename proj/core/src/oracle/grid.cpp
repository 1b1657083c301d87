#include "ckosc/oracle/grid.hpp"

#include <algorithm>
#include <cmath>

#include "ckosc/errors.hpp"

namespace ckosc::oracle {

std::vector<double> GridSpec::positions() const {
  std::vector<double> q(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) q[static_cast<std::size_t>(i)] = at(i);
  q.back() = q_max;
  return q;
}

GridSpec make_uniform_grid(double q_min, double q_max, int n_points) {
  if (!(q_max > q_min) || !std::isfinite(q_min) || !std::isfinite(q_max)) {
    throw InvalidArgument("grid requires finite q_min < q_max");
  }
  int points = kMinGridPoints;
  while (points < n_points) points = 2 * (points - 1) + 1;
  return {q_min, q_max, points, (q_max - q_min) / (points - 1)};
}

GridSpec make_grid(const PhysicalParams& params, const StateSpec& spec, double t, int n_points) {
  const GaussCoeffs coeffs = gauss_coeffs(params, spec.squeeze, t);
  const double ground_spread = 1.0 / (coeffs.A * std::sqrt(2.0));
  double centre = 0.0;
  double spread = ground_spread;
  double half_width = 10.0 * ground_spread;
  double wavenumber = coeffs.A;
  if (const auto* number = std::get_if<NumberState>(&spec.kind)) {
    spread = std::sqrt(number->n + 0.5) / coeffs.A;
    half_width = 10.0 * spread;
    wavenumber = coeffs.A * std::sqrt(2.0 * number->n + 1.0);
  } else {
    const auto& coherent = std::get<CoherentState>(spec.kind);
    centre = coherent.qc;
    half_width = std::max(10.0 * ground_spread, std::abs(coherent.qc) + 10.0 * ground_spread);
    wavenumber += std::abs(coherent.pc) / params.hbar();
  }
  // Local wavenumber of e^{-B (q - centre)^2} within kResolvedSpreads of the centre.
  wavenumber += 2.0 * std::abs(coeffs.B) * kResolvedSpreads * spread;
  const double needed = std::ceil(2.0 * half_width * wavenumber / kMaxPhaseStep) + 1.0;
  const int resolved = static_cast<int>(std::min(needed, static_cast<double>(kMaxGridPoints)));
  return make_uniform_grid(centre - half_width, centre + half_width, std::max(n_points, resolved));
}

}  // namespace ckosc::oracle
