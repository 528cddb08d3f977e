// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_ANALYSIS_HPP
#define HMIMO_ANALYSIS_HPP

#include "hmimo/em.hpp"

namespace hmimo::analysis {

/// Closed forms for the two-element side-by-side array in single-path LoS.
/// These serve as independent oracles for the multiport pipeline.

/// Electrical phase psi = 2 pi (d_H/lambda) cos(theta) sin(phi).
double psi(double spacing, double wavelength, double theta, double phi);

/// Array gain 2 (1 - mu cos psi) / (1 - mu^2), |mu| < 1.
double array_gain_closed(double mu, double psi);

/// Maximum array gain over directions: end-fire value for mu > 0, front-fire
/// 2/(1 + mu) for mu < 0.
double max_array_gain(double mu, double spacing_over_lambda);

/// mu0 = R_r / (R_r + R_d).
double mu_zero(const em::DipoleParams& params);

/// mu2 = (pi/2) Z0 / (R_r + R_d) with Z0 = 377 ohm.
double mu_two(const em::DipoleParams& params);

/// Small-spacing expansion of the array gain, valid for d_H/lambda << 1.
double array_gain_asymptotic(double spacing_over_lambda, double theta, double phi,
                             double mu0, double mu2);

/// Limit of the array gain as d_H/lambda -> 0; diverges when mu0 = 1
/// (lossless dipoles), reported as a domain error.
double array_gain_limit(double theta, double phi, double mu0, double mu2);

/// MR interference gain between UEs k and i (two-element array, full
/// matching).
double interference_gain_closed(double mu, double psi_k, double psi_i);

/// Quadratic approximation mu ~= mu0 - mu2 (d_H/lambda)^2.
double mu_taylor(double spacing_over_lambda, double mu0, double mu2);

}  // namespace hmimo::analysis

#endif
