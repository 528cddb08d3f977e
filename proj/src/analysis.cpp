// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "hmimo/constants.hpp"

namespace hmimo::analysis {
namespace {

constexpr double z0_stated = 377.0;  // free-space impedance as used in the
                                     // small-spacing expansion coefficients

void require_mu(double mu) {
  if (std::abs(mu) >= 1.0) {
    throw std::domain_error("analysis: |mu| must be < 1");
  }
}

}  // namespace

double psi(double spacing, double wavelength, double theta, double phi) {
  return 2.0 * pi * spacing / wavelength * std::cos(theta) * std::sin(phi);
}

double array_gain_closed(double mu, double psi) {
  require_mu(mu);
  return 2.0 * (1.0 - mu * std::cos(psi)) / (1.0 - mu * mu);
}

double max_array_gain(double mu, double spacing_over_lambda) {
  require_mu(mu);
  if (mu > 0.0) {
    return 2.0 * (1.0 - mu * std::cos(2.0 * pi * spacing_over_lambda)) /
           (1.0 - mu * mu);
  }
  return 2.0 / (1.0 + mu);
}

double mu_zero(const em::DipoleParams& params) {
  return params.radiation_resistance /
         (params.radiation_resistance + params.dissipation_resistance);
}

double mu_two(const em::DipoleParams& params) {
  return 0.5 * pi * z0_stated /
         (params.radiation_resistance + params.dissipation_resistance);
}

double array_gain_asymptotic(double spacing_over_lambda, double theta, double phi,
                             double mu0, double mu2) {
  const double x2 = spacing_over_lambda * spacing_over_lambda;
  const double cs = std::cos(theta) * std::sin(phi);
  const double num = 1.0 - mu0 + (2.0 * mu0 * pi * pi * cs * cs + mu2) * x2;
  const double den = (1.0 + mu0) * (1.0 - mu0 + mu2 * x2);
  return 2.0 * num / den;
}

double array_gain_limit(double theta, double phi, double mu0, double mu2) {
  if (mu0 >= 1.0) {
    throw std::domain_error(
        "array_gain_limit: diverges for lossless dipoles (mu0 = 1)");
  }
  const double cs = std::cos(theta) * std::sin(phi);
  return (2.0 * mu0 * pi * pi * cs * cs + mu2) / (mu0 * mu2);
}

double interference_gain_closed(double mu, double psi_k, double psi_i) {
  require_mu(mu);
  const double den = (1.0 - mu * std::cos(psi_k)) * (1.0 - mu * mu);
  return (1.0 + mu * mu - 2.0 * mu * (std::cos(psi_k) + std::cos(psi_i))) / den +
         (std::cos(psi_k - psi_i) + mu * mu * std::cos(psi_k + psi_i)) / den;
}

double mu_taylor(double spacing_over_lambda, double mu0, double mu2) {
  return mu0 - mu2 * spacing_over_lambda * spacing_over_lambda;
}

}  // namespace hmimo::analysis
