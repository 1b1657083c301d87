#include <doctest.h>

#include <cmath>
#include <random>

#include "ckosc/errors.hpp"
#include "ckosc/states.hpp"
#include "reference.hpp"

using namespace ckosc;

namespace {

const PhysicalParams kStar = make_params(1.0, 1.2, 1.0, 1.0);

// Coherent state as the explicit superposition e^{-|alpha|^2/2} sum alpha^n / sqrt(n!) Psi_n.
reference::cld coherent_sum(const reference::Oscillator& o, long double r, long double phi, long double t,
                            reference::cld alpha, long double q) {
  reference::cld total = 0;
  reference::cld weight = 1;
  for (int n = 0; n <= 30; ++n) {
    if (n > 0) weight *= alpha / std::sqrt(static_cast<long double>(n));
    total += weight * reference::number_state(o, n, r, phi, t, q).psi;
  }
  return std::exp(-std::norm(alpha) / 2) * total;
}

}  // namespace

TEST_CASE("hermite values") {
  CHECK(hermite(0, 0.7) == 1.0);
  CHECK(hermite(1, 0.7) == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hermite(3, 0.0) == 0.0);
  CHECK_THROWS_AS(hermite(-1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(hermite(33, 0.0), InvalidArgument);
  for (int n = 0; n <= 20; ++n) {
    for (double x : {-2.3, -0.4, 0.0, 0.9, 3.1}) {
      const long double expected = reference::hermite_sum(n, x);
      CHECK(hermite(n, x) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("gauss_coeffs at the reference point") {
  const GaussCoeffs g = gauss_coeffs(kStar, {}, 0.0);
  CHECK(g.A == doctest::Approx(std::sqrt(0.8)).epsilon(1e-15));
  CHECK(g.B.real() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(g.B.imag() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(g.Theta == 0.0);

  const GaussCoeffs flipped = gauss_coeffs(kStar, {}, 0.0, {.width_sign = WidthSign::Flipped});
  CHECK(flipped.B == -g.B);
}

TEST_CASE("gauss_coeffs without damping is the stationary oscillator") {
  const auto p = make_params(2.0, 0.0, 1.5, 0.5);
  for (double t : {0.0, 0.3, 2.0}) {
    const GaussCoeffs g = gauss_coeffs(p, {}, t);
    CHECK(g.A == doctest::Approx(std::sqrt(2.0 * 1.5 / 0.5)).epsilon(1e-14));
    CHECK(g.B.real() == doctest::Approx(2.0 * 1.5 / (2.0 * 0.5)).epsilon(1e-14));
    CHECK(std::abs(g.B.imag()) < 1e-14);
    CHECK(std::remainder(g.Theta - 1.5 * t, 2.0 * kPi) == doctest::Approx(0.0).scale(1.0));
  }
}

TEST_CASE("property: Re B = A^2 / 2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> r(0.0, 3.0), phi(0.0, 2.0 * kPi), t(0.0, 10.0), g(0.0, 1.99);
  for (int i = 0; i < 300; ++i) {
    const auto p = make_params(1.3, g(rng), 1.0, 0.8);
    const GaussCoeffs c = gauss_coeffs(p, {r(rng), phi(rng)}, t(rng));
    REQUIRE(c.B.real() == doctest::Approx(c.A * c.A / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("principal and continuous branches differ by multiples of 2 pi") {
  const SqueezeParams sq(0.8, 1.0);
  for (double t : {0.0, 1.0, 4.0, 9.0, 20.0}) {
    const double principal = gauss_coeffs(kStar, sq, t).Theta;
    const double continuous = gauss_coeffs(kStar, sq, t, {.branch = PhaseBranch::Continuous}).Theta;
    CHECK(principal > -kPi);
    CHECK(principal <= kPi);
    CHECK(std::remainder(continuous - principal, 2.0 * kPi) == doctest::Approx(0.0).scale(1.0));
  }
  // the lift keeps growing with t
  CHECK(gauss_coeffs(kStar, sq, 20.0, {.branch = PhaseBranch::Continuous}).Theta > 10.0);
}

TEST_CASE("number state values") {
  const double psi0 = std::abs(eval_number_state(kStar, StateSpec::number(0), 0.0, 0.0));
  CHECK(psi0 == doctest::Approx(std::pow(0.8 / kPi, 0.25)).epsilon(1e-15));
  CHECK(psi0 == doctest::Approx(0.710371).epsilon(1e-6));

  CHECK(std::abs(eval_number_state(kStar, StateSpec::number(1, {0.4, 1.0}), 2.0, 0.0)) == 0.0);
  CHECK(std::abs(eval_number_state(kStar, StateSpec::number(3, {0.4, 1.0}), 2.0, 0.0)) == 0.0);

  CHECK_THROWS_AS(eval_number_state(kStar, StateSpec::number(33), 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(eval_number_state(kStar, StateSpec::number(-1), 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(eval_number_state(kStar, StateSpec::coherent(1, 0), 0.0, 0.0), InvalidArgument);
}

TEST_CASE("number states agree with the long double reference") {
  reference::Oscillator o;
  for (int n : {0, 1, 2, 5, 12}) {
    for (double r : {0.0, 0.5, 1.5}) {
      for (double t : {0.0, 0.7, 3.0}) {
        const StateSpec spec = StateSpec::number(n, {r, 2.0});
        for (double q : {-1.7, -0.2, 0.4, 2.2}) {
          const auto expected = reference::number_state(o, n, r, 2.0, t, q).psi;
          const complex got = evaluate(kStar, spec, t, q, {.branch = PhaseBranch::Continuous});
          const double scale = std::max(1e-3, static_cast<double>(std::abs(expected)));
          REQUIRE(std::abs(got - complex(expected)) / scale < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("r = 0 reproduces the pseudo-stationary damped ground state") {
  // |psi|^2 Gaussian of width 1/A with A^2 = m0 omega e^{gamma t} / hbar, chirp from Im B = -M gamma / 4 hbar
  for (double t : {0.0, 1.0, 2.5}) {
    const GaussCoeffs g = gauss_coeffs(kStar, {}, t);
    const double mass = std::exp(1.2 * t);
    CHECK(g.A * g.A == doctest::Approx(mass * 0.8).epsilon(1e-13));
    CHECK(g.B.imag() == doctest::Approx(mass * 1.2 / 4.0).epsilon(1e-13));
  }
}

TEST_CASE("sample_state matches pointwise evaluation") {
  const StateSpec spec = StateSpec::number(3, {0.3, 0.9});
  const std::vector<double> qs{-2.0, -1.0, 0.0, 0.5, 1.5};
  const auto samples = sample_state(kStar, spec, 1.1, qs);
  REQUIRE(samples.size() == qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) CHECK(samples[i] == evaluate(kStar, spec, 1.1, qs[i]));
}

TEST_CASE("coherent trajectory and alpha") {
  const PhasePoint point = coherent_trajectory(kStar, {}, complex(1.0, 0.0), 0.0);
  CHECK(point.qc == doctest::Approx(std::sqrt(2.5)).epsilon(1e-14));
  CHECK(point.qc == doctest::Approx(1.581139).epsilon(1e-6));
  CHECK(point.pc == doctest::Approx(-0.6 * std::sqrt(2.5)).epsilon(1e-14));
  CHECK(point.pc == doctest::Approx(-0.948683).epsilon(1e-6));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> x(-3.0, 3.0), t(0.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    const SqueezeParams sq(0.5 * std::abs(x(rng)), 1.0 + x(rng));
    const complex alpha(x(rng), x(rng));
    const double at = t(rng);
    const complex back = coherent_alpha(kStar, sq, coherent_trajectory(kStar, sq, alpha, at), at);
    REQUIRE(std::abs(back - alpha) < 1e-12 * (1.0 + std::abs(alpha)));
  }
}

TEST_CASE("advance moves coherent labels along the classical path") {
  const SqueezeParams sq(0.4, 1.0);
  const StateSpec spec = StateSpec::coherent(1.0, -0.5, sq);
  const StateSpec later = advance(kStar, spec, 0.0, 2.0);
  const complex alpha = coherent_alpha(kStar, sq, {1.0, -0.5}, 0.0);
  const PhasePoint expected = coherent_trajectory(kStar, sq, alpha, 2.0);
  const auto& c = std::get<CoherentState>(later.kind);
  CHECK(c.qc == doctest::Approx(expected.qc).epsilon(1e-13));
  CHECK(c.pc == doctest::Approx(expected.pc).epsilon(1e-13));

  const StateSpec number = StateSpec::number(2, sq);
  CHECK(std::get<NumberState>(advance(kStar, number, 0.0, 5.0).kind).n == 2);
}

TEST_CASE("coherent state with zero displacement is the squeezed ground state") {
  const SqueezeParams sq(0.6, 2.0);
  for (double q : {-1.0, 0.0, 0.3, 2.0}) {
    const complex a = evaluate(kStar, StateSpec::coherent(0.0, 0.0, sq), 1.3, q);
    const complex b = evaluate(kStar, StateSpec::number(0, sq), 1.3, q);
    CHECK(std::abs(a - b) < 1e-15);
  }
}

TEST_CASE("coherent state equals the displaced number-state series") {
  reference::Oscillator o;
  for (double r : {0.0, 0.7}) {
    const SqueezeParams sq(r, 1.4);
    for (double t : {0.0, 0.5}) {
      const complex alpha(0.9, -0.6);
      const PhasePoint point = coherent_trajectory(kStar, sq, alpha, t);
      const StateSpec spec = StateSpec::coherent(point.qc, point.pc, sq);
      for (double q : {-1.5, -0.3, 0.2, 1.1, 2.4}) {
        const auto expected = coherent_sum(o, r, 1.4, t, reference::cld(0.9L, -0.6L), q);
        const complex got = evaluate(kStar, spec, t, q, {.branch = PhaseBranch::Continuous});
        CHECK(std::abs(got - complex(expected)) < 1e-11);
      }
    }
  }
}

TEST_CASE("coherent density peaks at qc") {
  const StateSpec spec = StateSpec::coherent(2.0, 0.0);
  const double peak = std::norm(evaluate(kStar, spec, 0.0, 2.0));
  CHECK(peak == doctest::Approx(std::sqrt(0.8 / kPi)).epsilon(1e-14));
  CHECK(std::norm(evaluate(kStar, spec, 0.0, 1.9)) < peak);
  CHECK(std::norm(evaluate(kStar, spec, 0.0, 2.1)) < peak);
}

TEST_CASE("the literal coherent phase is not unimodular") {
  const StateSpec spec = StateSpec::coherent(1.0, 0.5);
  const EvalOptions literal{.coherent_phase = CoherentPhase::QuadraticForm};
  const double ratio = std::abs(evaluate(kStar, spec, 0.0, 1.0, literal)) / std::abs(evaluate(kStar, spec, 0.0, 1.0));
  CHECK(std::abs(ratio - 1.0) > 0.1);
}
