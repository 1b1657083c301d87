#include "ckosc/oracle/quadrature.hpp"

#include <cmath>
#include <vector>

#include "ckosc/errors.hpp"
#include "ckosc/oracle/operators.hpp"

namespace ckosc::oracle {

namespace {

template <typename T>
T simpson_impl(std::span<const T> values, double h) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) throw InvalidArgument("Simpson rule needs an odd number (>= 3) of samples");
  T odd{};
  T even{};
  for (std::size_t i = 1; i + 1 < n; i += 2) odd += values[i];
  for (std::size_t i = 2; i + 1 < n; i += 2) even += values[i];
  return (values.front() + values.back() + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

}  // namespace

double simpson(std::span<const double> values, double h) { return simpson_impl(values, h); }

complex simpson(std::span<const complex> values, double h) { return simpson_impl(values, h); }

complex inner_product(std::span<const complex> f, std::span<const complex> g, double h) {
  if (f.size() != g.size()) throw InvalidArgument("inner product of samples with different lengths");
  std::vector<complex> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) integrand[i] = std::conj(f[i]) * g[i];
  return simpson(std::span<const complex>(integrand), h);
}

double l2_norm(std::span<const complex> f, double h) { return std::sqrt(inner_product(f, f, h).real()); }

Moments moments(std::span<const complex> samples, const GridSpec& grid, const PhysicalParams& params, double t) {
  if (samples.size() != static_cast<std::size_t>(grid.n_points)) {
    throw InvalidArgument("sample count does not match grid");
  }
  const std::size_t n = samples.size();
  const double h = grid.dq;
  std::vector<double> density(n);
  std::vector<double> first(n);
  std::vector<double> second(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = grid.at(static_cast<int>(i));
    density[i] = std::norm(samples[i]);
    first[i] = q * density[i];
    second[i] = q * q * density[i];
  }

  const auto d1 = first_derivative(samples, h);
  const auto d2 = second_derivative(samples, h);
  const double hbar = params.hbar();
  std::vector<complex> p_integrand(n);
  std::vector<complex> p2_integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    p_integrand[i] = std::conj(samples[i]) * complex(0.0, -hbar) * d1[i];
    p2_integrand[i] = std::conj(samples[i]) * (-hbar * hbar) * d2[i];
  }

  Moments m;
  m.norm = simpson(std::span<const double>(density), h);
  m.q = simpson(std::span<const double>(first), h);
  m.q2 = simpson(std::span<const double>(second), h);
  m.p = simpson(std::span<const complex>(p_integrand), h).real();
  m.p2 = simpson(std::span<const complex>(p2_integrand), h).real();
  const double mass = params.mass(t);
  m.energy = m.p2 / (2.0 * mass) + 0.5 * mass * params.omega0() * params.omega0() * m.q2;
  if (!(std::abs(m.norm - 1.0) <= 1e-6)) {
    m.warning = "ill-conditioned input: norm deviates from 1 by " + std::to_string(m.norm - 1.0);
  }
  return m;
}

}  // namespace ckosc::oracle
