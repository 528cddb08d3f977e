// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_SPECIAL_FUNCTIONS_HPP
#define HMIMO_SPECIAL_FUNCTIONS_HPP

namespace hmimo {

struct SiCi {
  double si;
  double ci;
};

/// Sine and cosine integrals,
///   Si(x) = int_0^x sin(t)/t dt,
///   Ci(x) = -int_x^inf cos(t)/t dt,
/// evaluated together since every dipole impedance needs both.  Power series
/// below the crossover, continued fraction of E1(ix) above it; absolute error
/// below 1e-12 over the arguments that occur in practice (x up to ~1e4).
///
/// Requires x >= 0; Ci additionally requires x > 0 (throws std::domain_error).
SiCi sin_cos_integrals(double x);

double sine_integral(double x);
double cosine_integral(double x);

}  // namespace hmimo

#endif
