// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "hmimo/constants.hpp"
#include "hmimo/special_functions.hpp"
#include "support/oracles.hpp"

using namespace hmimo;

TEST_CASE("sine integral limits") {
  CHECK(sin_cos_integrals(0.0).si == 0.0);
  CHECK(std::abs(sine_integral(1e6) - pi / 2.0) < 1e-5);
}

TEST_CASE("cosine integral reference value") {
  // Frozen from the quadrature oracle.
  const double ref = 0.337403922900968;
  CHECK(std::abs(cosine_integral(1.0) - ref) < 1e-14);
  CHECK(std::abs(test::quad_ci(1.0) - ref) < 1e-12);
}

TEST_CASE("cosine integral domain") {
  CHECK_THROWS_AS(cosine_integral(0.0), std::domain_error);
  CHECK_THROWS_AS(cosine_integral(-1.0), std::domain_error);
  CHECK_THROWS_AS(sin_cos_integrals(-0.5), std::domain_error);
}

TEST_CASE("Si/Ci agree with quadrature oracle to 1e-12") {
  // Covers both evaluation branches and the crossover.
  const double args[] = {1e-3, 0.1,  0.5,  1.0,  2.0,   4.0,   6.0,  8.0,
                         8.999, 9.0, 9.001, 12.0, 20.0, 45.5, 100.0, 500.0};
  for (double x : args) {
    const SiCi v = sin_cos_integrals(x);
    INFO("x = " << x);
    CHECK(std::abs(v.si - test::quad_si(x)) < 1e-12);
    CHECK(std::abs(v.ci - test::quad_ci(x)) < 1e-12);
  }
}
