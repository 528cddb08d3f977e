// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "hmimo/linalg.hpp"

namespace hmimo::scattering {

PowerWaves power_waves(const PortState& state) {
  const double re = state.z_ref.real();
  if (re <= 0.0) {
    throw std::domain_error("power_waves: Re{Z_ref} must be > 0");
  }
  const double scale = 2.0 * std::sqrt(re);
  return {(state.v + state.z_ref * state.i) / scale,
          (state.v - std::conj(state.z_ref) * state.i) / scale};
}

Eigen::MatrixXcd s_from_z(const Eigen::MatrixXcd& z, const Eigen::VectorXcd& z_refs) {
  const Eigen::Index n = z.rows();
  if (z_refs.size() != n) {
    throw std::invalid_argument("s_from_z: one reference impedance per port");
  }
  Eigen::VectorXcd f(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double re = z_refs(k).real();
    if (re <= 0.0) throw std::domain_error("s_from_z: Re{Z_ref} must be > 0");
    f(k) = 1.0 / (2.0 * std::sqrt(re));
  }
  const Eigen::MatrixXcd g = z_refs.asDiagonal();
  const Eigen::MatrixXcd num = z - g.conjugate();
  // (Z - G^*)(Z + G)^{-1} computed as a right division.
  const Eigen::MatrixXcd core =
      lu_solve((z + g).transpose(), num.transpose(), "s_from_z").transpose();
  return f.asDiagonal() * core * f.cwiseInverse().asDiagonal();
}

}  // namespace hmimo::scattering
