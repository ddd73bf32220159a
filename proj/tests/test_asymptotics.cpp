#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oscircle/asymptotics.hpp"

using namespace oscircle;

TEST_CASE("matching residual approaches its asymptotic envelope") {
  const double r5 = large_ell_envelope(0.9, 5.0, Parity::even);
  const double r6 = large_ell_envelope(0.9, 6.0, Parity::even);
  CHECK(std::abs(r5 - 0.97523875551381) <= 1e-6);
  CHECK(std::abs(r6 - 0.98335688435125) <= 1e-6);
  CHECK(std::abs(r6 - 1.0) < std::abs(r5 - 1.0));

  // the odd envelope at moderate ell still carries its 1/ell^2 correction
  CHECK(std::abs(large_ell_envelope(2.1, 5.0, Parity::odd) - 1.1082346814079) <= 1e-6);
}

TEST_CASE("envelope domain and gamma poles") {
  CHECK_THROWS_AS(large_ell_envelope(1.0, 2.9, Parity::even), std::invalid_argument);
  CHECK_THROWS_AS(large_ell_envelope(1.0, 8.5, Parity::even), std::invalid_argument);
  // E = 1/2 + 2k puts the even gamma factor on a pole, E = 3/2 + 2k the odd one
  CHECK_THROWS_AS(large_ell_envelope(0.5, 4.0, Parity::even), std::domain_error);
  CHECK_THROWS_AS(large_ell_envelope(2.5, 4.0, Parity::even), std::domain_error);
  CHECK_THROWS_AS(large_ell_envelope(1.5, 4.0, Parity::odd), std::domain_error);
}

TEST_CASE("free-extension ground level converges to one half from below") {
  const double e3 = find_spectrum({3.0, 0.0}, 1.0).pairs.front().energy;
  const double e4 = find_spectrum({4.0, 0.0}, 1.0).pairs.front().energy;
  CHECK(e3 < 0.5);
  CHECK(e4 < 0.5);
  CHECK(std::abs(e4 - 0.5) < std::abs(e3 - 0.5));
}

TEST_CASE("zero-potential analogue spectrum") {
  // beta = 0: constant mode at zero, then exactly degenerate odd/even pairs
  const auto free0 = free_particle_delta_spectrum({0.7, 0.0}, 5);
  REQUIRE(free0.size() == 5);
  CHECK(free0[0] == 0.0);
  CHECK(free0[1] == free0[2]);
  CHECK(free0[3] == free0[4]);

  // attractive delta binds one hyperbolic level below zero
  const auto bound = free_particle_delta_spectrum({0.05, -1.0}, 1);
  REQUIRE(bound.size() == 1);
  CHECK(std::abs(bound[0] + 0.50041694457674159) <= 1e-12);

  // repulsive case: transcendental even roots interleaved with the free odds
  const auto rep = free_particle_delta_spectrum({1.0, 1.0}, 5);
  REQUIRE(rep.size() == 5);
  CHECK(std::abs(rep[0] - 0.37008694219748352) <= 1e-10);
  CHECK(std::abs(rep[1] - kPi * kPi / 2.0) <= 1e-11);
  CHECK(std::abs(rep[2] - 5.8674309149709842) <= 1e-9);
  CHECK(std::abs(rep[3] - 2.0 * kPi * kPi) <= 1e-10);
  CHECK(std::abs(rep[4] - 20.719403923785233) <= 1e-9);

  CHECK(free_particle_delta_spectrum({1.0, 1.0}, 0).empty());
}

TEST_CASE("short segments follow the free-particle prediction") {
  const AsymptoticReport rep = small_ell_prediction({0.1, 0.5}, 5);
  CHECK(rep.regime == Regime::small_ell);
  REQUIRE(rep.predicted.size() == 5);
  REQUIRE(rep.computed.size() == 5);
  CHECK(rep.max_rel_error <= 1e-4);
  // lone n = 0 even level sits at beta/2 up to O(ell^2)
  CHECK(std::abs(rep.computed[0] - 0.25) <= 1e-2);

  CHECK_THROWS_AS(small_ell_prediction({0.3, 0.0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(small_ell_prediction({0.1, 0.0}, 0), std::invalid_argument);
}

TEST_CASE("long segments recover the line oscillator levels") {
  const Spectrum s = find_spectrum({5.0, 0.0}, 3.0);
  REQUIRE(s.pairs.size() >= 2);
  CHECK(std::abs(s.pairs[0].energy - 0.5) <= 1e-6);
  CHECK(std::abs(s.pairs[1].energy - 1.5) <= 1e-5);
  CHECK(s.pairs[0].parity == Parity::even);
  CHECK(s.pairs[1].parity == Parity::odd);
}
