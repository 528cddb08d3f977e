// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "hmimo/constants.hpp"
#include "hmimo/linalg.hpp"

namespace hmimo::channel {

std::complex<double> alpha_uplink(std::complex<double> z_load_bs,
                                  const UePhysicalConfig& ue) {
  const double r_g = ue.z_gen_ul.real();
  const double re_zat = ue.z_ant.real();
  if (r_g <= 0.0 || re_zat <= 0.0) {
    throw std::domain_error("alpha_uplink: resistances must be positive");
  }
  return -j1i * z_load_bs / (2.0 * std::sqrt(r_g * re_zat));
}

std::complex<double> alpha_downlink(const UePhysicalConfig& ue) {
  const std::complex<double> z_opt = ue.lna.optimal_impedance();
  const double re_zar = ue.z_ant.real();
  return j1i * ue.z_load_dl * std::sqrt(z_opt.real()) /
         ((ue.z_load_dl + z_opt) * std::sqrt(re_zar));
}

std::complex<double> xi_uplink(std::complex<double> z_load_bs,
                               std::complex<double> z_opt_bs,
                               const UePhysicalConfig& ue) {
  return 1.0 / (2.0 * std::sqrt(ue.z_gen_ul.real() * ue.z_ant.real())) *
         z_load_bs * std::sqrt(z_opt_bs.real()) / (z_load_bs + z_opt_bs);
}

std::complex<double> xi_downlink(std::complex<double> z_gen_bs,
                                 const UePhysicalConfig& ue) {
  const std::complex<double> z_opt = ue.lna.optimal_impedance();
  return 1.0 / (2.0 * std::sqrt(z_gen_bs.real() * ue.z_ant.real())) *
         ue.z_load_dl * std::sqrt(z_opt.real()) / (ue.z_load_dl + z_opt);
}

Eigen::VectorXcd uplink_channel(const Eigen::VectorXcd& z_art,
                                const matching::FrontEndReduction& rx,
                                const UePhysicalConfig& ue) {
  const Eigen::Index m = z_art.size();
  const Eigen::MatrixXcd sys =
      rx.termination * Eigen::MatrixXcd::Identity(m, m) + rx.z_eff;
  const Eigen::VectorXcd x = lu_solve(sys, rx.f * z_art, "uplink_channel");
  return alpha_uplink(rx.termination, ue) * x;
}

DownlinkChannel downlink_channel(const Eigen::VectorXcd& z_art,
                                 const matching::FrontEndReduction& tx,
                                 const UePhysicalConfig& ue) {
  const Eigen::Index m = z_art.size();
  const Eigen::MatrixXcd sys =
      tx.termination * Eigen::MatrixXcd::Identity(m, m) + tx.z_eff;
  DownlinkChannel out;
  out.d = alpha_downlink(ue) * lu_solve(sys, tx.f * z_art, "downlink_channel");
  out.h = apply_b_inverse_transpose_sqrt(tx.b, out.d);
  return out;
}

Eigen::MatrixXcd apply_b_inverse_transpose_sqrt(const Eigen::MatrixXcd& b,
                                                const Eigen::MatrixXcd& x) {
  // B^{-T/2} = (B^{1/2})^{-T}; with a Hermitian root this is conj(B^{-1/2}).
  const Eigen::MatrixXcd root = principal_sqrt(b);
  return lu_solve(root.transpose(), x, "apply_b_inverse_transpose_sqrt");
}

Eigen::VectorXcd duality_transform(const Eigen::VectorXcd& h_ul,
                                   const matching::FrontEndReduction& rx_ul,
                                   const matching::FrontEndReduction& tx_dl,
                                   matching::MatchingKind kind,
                                   const UePhysicalConfig& ue) {
  using matching::MatchingKind;
  const Eigen::Index m = h_ul.size();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(m, m);

  if (kind == MatchingKind::Full) {
    const std::complex<double> z_opt_bs = rx_ul.z_eff(0, 0);
    const std::complex<double> ratio =
        xi_downlink(tx_dl.termination, ue) / xi_uplink(rx_ul.termination, z_opt_bs, ue);
    return ratio * h_ul;
  }

  const std::complex<double> ratio =
      alpha_downlink(ue) / alpha_uplink(rx_ul.termination, ue);

  if (kind == MatchingKind::None) {
    return ratio * apply_b_inverse_transpose_sqrt(tx_dl.b, h_ul);
  }

  // Arbitrary matching: A = (Z_G I + Z_T)^{-1} F_T F_R^{-1} (Z_L I + Z_R).
  const Eigen::MatrixXcd f_r_inv = lu_solve(rx_ul.f, identity, "duality_transform/F_R");
  const Eigen::MatrixXcd right =
      f_r_inv * (rx_ul.termination * identity + rx_ul.z_eff);
  const Eigen::MatrixXcd a = lu_solve(
      tx_dl.termination * identity + tx_dl.z_eff, tx_dl.f * right, "duality_transform/A");
  return ratio * apply_b_inverse_transpose_sqrt(tx_dl.b, (a * h_ul).eval());
}

double power_mapping(double tx_power_watts, double r_gen) {
  if (tx_power_watts <= 0.0) {
    throw std::domain_error("power_mapping: transmit power must be > 0");
  }
  return 4.0 * r_gen * tx_power_watts;  // c = 1 V^2
}

double downlink_noise_variance(const UePhysicalConfig& ue,
                               const noise::NoisePhysics& phys) {
  // Variance at the UE load: the load divider that already scales alpha_dl
  // scales the noise as well, keeping downlink SINRs consistent with the
  // uplink ones under full matching.
  const std::complex<double> z_opt = ue.lna.optimal_impedance();
  const double divider = std::norm(ue.z_load_dl / (ue.z_load_dl + z_opt));
  return divider * noise::matched_noise_variance(ue.lna, phys);
}

}  // namespace hmimo::channel
