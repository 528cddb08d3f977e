// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/noise.hpp"

#include "hmimo/constants.hpp"
#include "hmimo/linalg.hpp"

namespace hmimo::noise {

Eigen::MatrixXcd extrinsic_cov(const Eigen::MatrixXcd& z_ar, const NoisePhysics& phys) {
  return 4.0 * boltzmann * phys.antenna_temp_k * phys.bandwidth_hz *
         hermitian_part(z_ar);
}

Eigen::MatrixXcd intrinsic_cov(const Eigen::MatrixXcd& z_r,
                               const matching::LnaParams& lna) {
  const Eigen::Index m = z_r.rows();
  const double rn = lna.noise_resistance;
  // Covariance of -v_LNA + Z_R i_LNA; the cross term is the Hermitian part
  // of rho^* Z_R, which reduces to the entrywise real part for the
  // complex-symmetric Z_R of reciprocal front ends.
  const Eigen::MatrixXcd cross =
      std::conj(lna.rho) * z_r + lna.rho * z_r.adjoint();
  return lna.current_noise_var *
         (z_r * z_r.adjoint() - rn * cross +
          rn * rn * Eigen::MatrixXcd::Identity(m, m));
}

Eigen::MatrixXcd total_noise_cov(const Eigen::MatrixXcd& q,
                                 const Eigen::MatrixXcd& u_in,
                                 const Eigen::MatrixXcd& r_en,
                                 const Eigen::MatrixXcd& f_r) {
  const Eigen::MatrixXcd u = u_in + f_r * r_en * f_r.adjoint();
  return q * u * q.adjoint();
}

double matched_noise_variance(const matching::LnaParams& lna,
                              const NoisePhysics& phys) {
  const std::complex<double> z_opt = lna.optimal_impedance();
  const double rn = lna.noise_resistance;
  const double lna_term =
      lna.current_noise_var *
      (std::norm(z_opt) - 2.0 * rn * (std::conj(lna.rho) * z_opt).real() + rn * rn);
  const double ext_term = 4.0 * boltzmann * phys.antenna_temp_k * phys.bandwidth_hz *
                          z_opt.real();
  return lna_term + ext_term;
}

}  // namespace hmimo::noise
