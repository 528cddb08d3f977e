// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.
//
// Test-only numerical oracles, independent of the library implementations
// they check: quadrature-based sine/cosine integrals and the induced-EMF
// integral for dipole mutual impedances.

#ifndef HMIMO_TESTS_ORACLES_HPP
#define HMIMO_TESTS_ORACLES_HPP

#include <complex>
#include <functional>
#include <vector>

#include "hmimo/em.hpp"

namespace hmimo::test {

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// int_a^b f dx with composite Gauss-Legendre panels.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 64, int order = 16);

/// Si(x) by direct quadrature of sin(t)/t.
double quad_si(double x);

/// Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt by direct quadrature.
double quad_ci(double x);

/// Mutual impedance of two parallel half-wave dipoles (lateral distance d,
/// axial stagger h) by numerical integration of the induced-EMF integral
/// with sinusoidal currents.  Reproduces the closed forms to ~1e-12.
std::complex<double> emf_mutual_impedance(double lateral, double axial,
                                          const em::DipoleParams& params);

}  // namespace hmimo::test

#endif
