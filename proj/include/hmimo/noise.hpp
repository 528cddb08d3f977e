// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_NOISE_HPP
#define HMIMO_NOISE_HPP

#include <Eigen/Dense>

#include "hmimo/matching.hpp"

namespace hmimo::noise {

struct NoisePhysics {
  double antenna_temp_k = 290.0;  // T_A > 0
  double bandwidth_hz = 20e6;     // equivalent noise bandwidth, > 0
};

/// Open-circuit extrinsic noise covariance R_EN = 4 k_B T_A df Re(Z_AR) [V^2].
Eigen::MatrixXcd extrinsic_cov(const Eigen::MatrixXcd& z_ar, const NoisePhysics& phys);

/// LNA noise covariance at the loads,
///   U_IN = sigma_i^2 (Z_R Z_R^H - R_N (rho^* Z_R + rho Z_R^H) + R_N^2 I),
/// Hermitian PSD for |rho| <= 1.
Eigen::MatrixXcd intrinsic_cov(const Eigen::MatrixXcd& z_r,
                               const matching::LnaParams& lna);

/// Total noise covariance R_eta = Q (U_IN + F_R R_EN F_R^H) Q^H [V^2].
Eigen::MatrixXcd total_noise_cov(const Eigen::MatrixXcd& q,
                                 const Eigen::MatrixXcd& u_in,
                                 const Eigen::MatrixXcd& r_en,
                                 const Eigen::MatrixXcd& f_r);

/// Per-port variance under full noise matching,
///   sigma^2 = sigma_i^2 (|Z_opt|^2 - 2 R_N Re(rho^* Z_opt) + R_N^2)
///           + 4 k_B T_A df Re{Z_opt}.
double matched_noise_variance(const matching::LnaParams& lna,
                              const NoisePhysics& phys);

}  // namespace hmimo::noise

#endif
