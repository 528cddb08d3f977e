// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_SCATTERING_HPP
#define HMIMO_SCATTERING_HPP

#include <Eigen/Dense>
#include <complex>

namespace hmimo::scattering {

/// Voltage/current state of one port with its reference impedance.
struct PortState {
  std::complex<double> v;      // [V]
  std::complex<double> i;      // [A]
  std::complex<double> z_ref;  // Re > 0
};

struct PowerWaves {
  std::complex<double> a;  // incident
  std::complex<double> b;  // reflected
};

/// a = (v + Z i) / (2 sqrt(Re Z)), b = (v - Z^* i) / (2 sqrt(Re Z));
/// |a|^2 - |b|^2 equals the power Re(v i^*) flowing into the port.
PowerWaves power_waves(const PortState& state);

/// S = F (Z - G^*)(Z + G)^{-1} F^{-1} with F, G diagonal from the per-port
/// reference impedances.  Unitary and symmetric for lossless reciprocal
/// networks with real references.
Eigen::MatrixXcd s_from_z(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& z_refs);

}  // namespace hmimo::scattering

#endif
