// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_EM_HPP
#define HMIMO_EM_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace hmimo::em {

enum class DipoleConfig { SideBySide, Collinear, ParallelInEchelon };

/// Half-wavelength center-fed dipole under the sinusoidal current model.
/// The radiation resistance is the real part of the closed-form self
/// impedance (about 73.13 ohm); the dissipation resistance models internal
/// ohmic loss and is added on the diagonal of the coupling matrix only.
struct DipoleParams {
  double wavelength = 1.0;              // [m]
  double length = 0.5;                  // [m], fixed at wavelength/2
  double radius = 1e-3;                 // [m], radius << length
  double radiation_resistance = 73.0;   // [ohm], Re of self impedance
  double dissipation_resistance = 0.0;  // [ohm]

  /// Build a half-wave dipole; the radiation resistance is computed from the
  /// closed-form self impedance so that closed forms, coupling matrices and
  /// the two-element normalizations stay mutually consistent.
  static DipoleParams half_wave(double wavelength,
                                double radius_over_lambda = 1e-3,
                                double dissipation_ratio = 1e-3);
};

/// Uniform linear array of identical dipoles, all oriented along z.
/// The default axis is y, so that phi = 0 is front-fire (broadside) and
/// phi = +-pi/2 is end-fire.
struct ArrayGeometry {
  Eigen::Matrix3Xd positions;  // element centers, 3 x M [m]
  Eigen::Vector3d axis = Eigen::Vector3d::UnitY();
  double spacing = 0.5;        // [m]
  DipoleConfig configuration = DipoleConfig::SideBySide;
  int count = 1;

  static ArrayGeometry uniform_linear(
      int count, double spacing,
      const Eigen::Vector3d& axis = Eigen::Vector3d::UnitY());
};

/// One far-field plane wave reaching the array.
struct PlanePath {
  double elevation = 0.0;  // theta [rad], in [-pi/2, pi/2)
  double azimuth = 0.0;    // phi [rad], in [-pi/2, pi/2)
  double distance = 1.0;   // [m], > 0
  std::complex<double> gain{1.0, 0.0};  // extra multiplicative path weight
};

/// Closed-form self impedance of the half-wave dipole (induced EMF method,
/// sinusoidal current).  Excludes the dissipation resistance.
std::complex<double> self_impedance(const DipoleParams& params);

/// Closed-form mutual impedance between two identical half-wave dipoles.
/// SideBySide: `separation` is the lateral distance, `offset` must be 0.
/// Collinear: `separation` is the center-to-center distance along the dipole
/// axis and must exceed the dipole length. ParallelInEchelon: `separation`
/// is lateral, `offset` is the axial stagger.
std::complex<double> mutual_impedance(DipoleConfig config, double separation,
                                      double offset,
                                      const DipoleParams& params);

/// M x M array impedance matrix: self impedance + dissipation resistance on
/// the diagonal, closed-form mutual impedances off it.  Symmetric by
/// reciprocity.  `dissipation_override`, when non-empty, gives per-antenna
/// dissipation resistances.
Eigen::MatrixXcd coupling_matrix(const ArrayGeometry& geom,
                                 const DipoleParams& params,
                                 const std::vector<double>& dissipation_override = {});

/// Normalized mutual coupling mu = Re{Z_mutual(d)} / (R_r + R_d) for the
/// side-by-side pair.  First null near d = 0.43 lambda.
double mu_coefficient(double spacing, const DipoleParams& params);

/// Wave vector (2*pi/lambda) [cos(t)cos(p), cos(t)sin(p), sin(t)].
Eigen::Vector3d wave_vector(double theta, double phi, double wavelength);

/// Steering vector a(theta, phi) with entries exp(j k^T u_m).
Eigen::VectorXcd steering_vector(double theta, double phi,
                                 const ArrayGeometry& geom, double wavelength);

/// Vector effective length of the vertical half-wave dipole,
/// lambda * g(theta) * theta_hat with g = cos(pi/2 sin t)/(pi cos t).
/// Throws for |theta| >= pi/2 where the form is singular.
Eigen::Vector3cd effective_length(double theta, double phi,
                                  const DipoleParams& params);

/// LoS coupling scalar alpha' = j e^{j psi0} (l_tx . l_rx) / (2 lambda d)
/// with the reference phase psi0 = -2*pi*d/lambda at the array center.
std::complex<double> los_alpha_prime(double theta_tx, double phi_tx,
                                     double theta_rx, double phi_rx,
                                     double distance,
                                     const DipoleParams& params);

/// Transmit-to-receive coupling vector z_ART for a superposition of LoS
/// plane waves: sum over paths of gain * Z0 * alpha' * a(theta, phi).
/// The transmit-side angles are mirrored from the receive-side ones
/// (vertical dipoles at both ends of each path).
Eigen::VectorXcd z_art_los(const std::vector<PlanePath>& paths,
                           const ArrayGeometry& geom,
                           const DipoleParams& params,
                           const DipoleParams& tx_params);

/// Spatial correlation matrix of the open-circuit response,
///   [Sigma]_{nm} = int int beta(t,p) f(t,p) exp(j k(t,p)^T (u_n - u_m)) dt dp
/// over [-pi/2, pi/2)^2, by tensor-product Gauss-Legendre quadrature refined
/// until the Frobenius change falls below 1e-8.  f must integrate to one
/// (checked to 1e-6 with the same quadrature).
Eigen::MatrixXcd spatial_correlation(
    const std::function<double(double, double)>& beta,
    const std::function<double(double, double)>& f, const ArrayGeometry& geom,
    double wavelength);

}  // namespace hmimo::em

#endif
