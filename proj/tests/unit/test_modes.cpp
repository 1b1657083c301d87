#include <doctest.h>

#include <cmath>
#include <random>

#include "ckosc/errors.hpp"
#include "ckosc/modes.hpp"
#include "reference.hpp"

using namespace ckosc;

namespace {

const PhysicalParams kStar = make_params(1.0, 1.2, 1.0, 1.0);

double wronskian_deviation(const PhysicalParams& p, const ModeValue& m) {
  return std::abs(wronskian(p, m) - complex(0.0, 1.0));
}

// Circular distance between two phases.
double phase_distance(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

}  // namespace

TEST_CASE("make_params derives the shifted frequency") {
  CHECK(make_params(1, 0, 1, 1).omega() == 1.0);
  // sqrt(1 - 0.36) in long double
  const long double expected = std::sqrt(1.0L - 0.36L);
  CHECK(kStar.omega() == doctest::Approx(static_cast<double>(expected)).epsilon(1e-15));
  CHECK(kStar.omega() == doctest::Approx(0.8).epsilon(1e-15));

  for (double gamma : {0.0, 0.3, 1.2, 1.99}) {
    const auto p = make_params(2.0, gamma, 1.5, 0.7);
    CHECK(std::abs(p.omega() * p.omega() + gamma * gamma / 4.0 - 1.5 * 1.5) < 1e-14);
  }
}

TEST_CASE("make_params rejects invalid constants") {
  CHECK_THROWS_AS(make_params(1, 2.0, 1, 1), NotUnderdamped);
  CHECK_THROWS_AS(make_params(1, 2.5, 1, 1), NotUnderdamped);
  CHECK_THROWS_AS(make_params(0, 0.1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(make_params(1, -0.1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(make_params(1, 0.1, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(make_params(1, 0.1, 1, -1), InvalidArgument);
  CHECK_THROWS_AS(make_params(1, NAN, 1, 1), InvalidArgument);
  // the underdamped error is distinct from the generic one
  try {
    make_params(1, 2.0, 1, 1);
    FAIL("expected throw");
  } catch (const NotUnderdamped& e) {
    CHECK(std::string(e.what()).find("not underdamped") != std::string::npos);
  }
}

TEST_CASE("SqueezeParams keeps phi in [0, 2 pi) and mu, nu hyperbolic") {
  const SqueezeParams s(0.7, -1.0);
  CHECK(s.phi() == doctest::Approx(2.0 * kPi - 1.0));
  CHECK(SqueezeParams(0.1, 2.0 * kPi).phi() == 0.0);
  CHECK_THROWS_AS(SqueezeParams(-0.1, 0.0), InvalidArgument);
  for (double r : {0.0, 0.3, 1.0, 3.0}) {
    const SqueezeParams sq(r, 2.2);
    CHECK(std::norm(sq.mu()) - std::norm(sq.nu()) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("mode_u0 values") {
  const ModeValue m = mode_u0(kStar, 0.0);
  const long double amplitude = 1.0L / std::sqrt(1.6L);
  CHECK(m.u.real() == doctest::Approx(static_cast<double>(amplitude)).epsilon(1e-15));
  CHECK(m.u.real() == doctest::Approx(0.790569).epsilon(1e-6));
  CHECK(m.u.imag() == 0.0);
  CHECK(m.udot.real() == doctest::Approx(-0.6 * 0.790569415042095).epsilon(1e-14));
  CHECK(m.udot.imag() == doctest::Approx(-0.8 * 0.790569415042095).epsilon(1e-14));
  CHECK(wronskian_deviation(kStar, m) < 1e-12);

  const auto undamped = make_params(1, 0, 1, 1);
  const ModeValue quarter = mode_u0(undamped, kPi / 2.0);
  CHECK(std::abs(quarter.u - complex(0.0, -1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("mode_u_rphi reduces to u0 at r = 0 and matches the long double superposition") {
  for (double t : {0.0, 0.37, 5.0}) {
    const ModeValue a = mode_u0(kStar, t);
    const ModeValue b = mode_u_rphi(kStar, {0.0, 2.5}, t);
    CHECK(a.u == b.u);
    CHECK(a.udot == b.udot);
  }
  const ModeValue m = mode_u_rphi(kStar, {0.5, 0.0}, 0.0);
  CHECK(m.u.real() == doctest::Approx(std::exp(0.5) / std::sqrt(1.6)).epsilon(1e-15));
  CHECK(std::abs(m.u.imag()) < 1e-16);

  reference::Oscillator o;
  const auto [u, ud] = reference::mode(o, 0.3L, 1.0L, 0.7L);
  const ModeValue c = mode_u_rphi(kStar, {0.3, 1.0}, 0.7);
  CHECK(std::abs(c.u - complex(u)) < 1e-15);
  CHECK(std::abs(c.udot - complex(ud)) < 1e-15);
  CHECK(wronskian_deviation(kStar, c) < 1e-12);
}

TEST_CASE("property: Wronskian equals i over random parameters") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ratio(0.0, 1.99), r(0.0, 3.0), phi(0.0, 2.0 * kPi), unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double gamma = ratio(rng);
    const auto p = make_params(0.5 + unit(rng), gamma, 1.0, 0.5 + unit(rng));
    const double horizon = gamma > 0 ? 10.0 / gamma : 10.0;
    const ModeValue m = mode_u_rphi(p, {r(rng), phi(rng)}, horizon * unit(rng));
    REQUIRE(wronskian_deviation(p, m) < 1e-12);
  }
}

TEST_CASE("property: u_rphi solves the damped oscillator equation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> r(0.0, 2.0), phi(0.0, 2.0 * kPi), t(0.0, 5.0);
  const double h = 1e-4;
  for (int i = 0; i < 50; ++i) {
    const SqueezeParams sq(r(rng), phi(rng));
    const double at = t(rng);
    const complex um = mode_u_rphi(kStar, sq, at - h).u;
    const complex u = mode_u_rphi(kStar, sq, at).u;
    const complex up = mode_u_rphi(kStar, sq, at + h).u;
    const complex residual = (up - 2.0 * u + um) / (h * h) + kStar.gamma() * (up - um) / (2.0 * h) + u;
    CHECK(std::abs(residual) / std::abs(u) < 1e-6);
    // the stored derivative agrees with a central difference
    CHECK(std::abs((up - um) / (2.0 * h) - mode_u_rphi(kStar, sq, at).udot) / std::abs(u) < 1e-6);
  }
}

TEST_CASE("squeeze_from_mode inverts mode_u_rphi") {
  const SqueezeParams identity = squeeze_from_mode(kStar, mode_u0(kStar, 1.7));
  CHECK(identity.r() == 0.0);
  CHECK(identity.phi() == 0.0);

  const SqueezeParams back = squeeze_from_mode(kStar, mode_u_rphi(kStar, {0.4, 2.1}, 1.3));
  CHECK(back.r() == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(phase_distance(back.phi(), 2.1) < 1e-10);

  // an overall phase of u is gauge
  ModeValue rotated = mode_u_rphi(kStar, {0.9, 4.0}, 0.2);
  rotated.u *= std::polar(1.0, 0.77);
  rotated.udot *= std::polar(1.0, 0.77);
  const SqueezeParams gauge = squeeze_from_mode(kStar, rotated);
  CHECK(gauge.r() == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(phase_distance(gauge.phi(), 4.0) < 1e-12);
}

TEST_CASE("property: round trip over r in [0, 3], phi in [0, 2 pi)") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> r(0.0, 3.0), phi(0.0, 2.0 * kPi), t(0.0, 8.0);
  for (int i = 0; i < 400; ++i) {
    const SqueezeParams sq(r(rng), phi(rng));
    const SqueezeParams back = squeeze_from_mode(kStar, mode_u_rphi(kStar, sq, t(rng)));
    REQUIRE(std::abs(back.r() - sq.r()) < 1e-10);
    REQUIRE(phase_distance(back.phi(), sq.phi()) < 1e-10);
  }
}

TEST_CASE("squeeze_from_mode rejects modes violating the Wronskian") {
  ModeValue scaled = mode_u_rphi(kStar, {0.4, 2.1}, 1.3);
  scaled.u *= 1.01;
  scaled.udot *= 1.01;
  CHECK_THROWS_AS(squeeze_from_mode(kStar, scaled), WronskianViolation);

  ModeValue slightly = mode_u0(kStar, 0.0);
  slightly.u *= 1.0 + 1e-10;
  CHECK_NOTHROW(squeeze_from_mode(kStar, slightly));
}

TEST_CASE("special_squeeze") {
  const SpecialSqueeze special = special_squeeze(kStar);
  // long double: 2 r0 = arccosh(1 + 1.44 / 5.12), tan phi0 = 8/3
  const long double r0 = std::acosh(1.28125L) / 2;
  CHECK(special.squeeze.r() == doctest::Approx(static_cast<double>(r0)).epsilon(1e-14));
  CHECK(special.squeeze.r() == doctest::Approx(0.366725).epsilon(1e-6));
  // the (0, pi/2) root of tan phi0 = 8/3 is 1.212026; the width-matching branch is that plus pi
  const long double principal = std::atan(8.0L / 3.0L);
  CHECK(principal == doctest::Approx(1.212026).epsilon(1e-6));
  CHECK(special.branch_shifted);
  CHECK(special.squeeze.phi() == doctest::Approx(static_cast<double>(principal + reference::kPiL)).epsilon(1e-14));
  CHECK(special.rejected_mismatch > 0.1);
  CHECK(std::tan(special.squeeze.phi()) == doctest::Approx(4.0 * 0.8 / 1.2).epsilon(1e-12));

  CHECK_THROWS_AS(special_squeeze(make_params(1, 0, 1, 1)), InvalidArgument);

  double previous = special.squeeze.r();
  for (double gamma : {0.5, 1e-1, 1e-2, 1e-3, 1e-5}) {
    const double r = special_squeeze(make_params(1, gamma, 1, 1)).squeeze.r();
    CHECK(r < previous);
    previous = r;
  }
  CHECK(previous < 1e-5);
}
