// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_CHANNEL_HPP
#define HMIMO_CHANNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hmimo/matching.hpp"
#include "hmimo/noise.hpp"

namespace hmimo::channel {

/// Physical front end of a single-antenna UE.  UEs always power-match in the
/// uplink and noise-match in the downlink, so the per-UE reductions collapse
/// to scalars.
struct UePhysicalConfig {
  std::complex<double> z_gen_ul{186.0, -31.6};   // UE generator impedance
  std::complex<double> z_load_dl{186.0, -31.6};  // UE load impedance
  std::complex<double> z_ant{73.0, 42.5};  // UE dipole impedance incl. R_d
  matching::LnaParams lna;                 // UE LNA (downlink noise matching)
};

/// One channel realization: per-UE uplink/downlink vectors plus the noise
/// quantities needed by the link layer.  All values dimensionless after the
/// c = 1 V^2 normalization.
struct ChannelSet {
  Eigen::MatrixXcd h_ul;   // M x K
  Eigen::MatrixXcd h_dl;   // M x K
  Eigen::MatrixXcd b_dl;   // downlink power-normalizing matrix
  Eigen::MatrixXcd r_n_ul; // uplink noise covariance
  double sigma_dl2 = 0.0;  // downlink noise variance at each UE
  matching::MatchingKind rx_kind = matching::MatchingKind::Full;
  matching::MatchingKind tx_kind = matching::MatchingKind::Full;
};

/// alpha_ul = -j Z_L / (2 sqrt(R_G Re{Z_AT})) for a power-matched UE.
std::complex<double> alpha_uplink(std::complex<double> z_load_bs,
                                  const UePhysicalConfig& ue);

/// alpha_dl = j Z_L sqrt(Re{Z_opt}) / ((Z_L + Z_opt) sqrt(Re{Z_AR})) for a
/// noise-matched UE.
std::complex<double> alpha_downlink(const UePhysicalConfig& ue);

/// Scalar channel coefficient under full matching at the BS (uplink).
std::complex<double> xi_uplink(std::complex<double> z_load_bs,
                               std::complex<double> z_opt_bs,
                               const UePhysicalConfig& ue);

/// Scalar channel coefficient under full matching at the BS (downlink).
std::complex<double> xi_downlink(std::complex<double> z_gen_bs,
                                 const UePhysicalConfig& ue);

/// h_k^ul = alpha_ul (Z_L I + Z_R)^{-1} F_R z_ART,k.
Eigen::VectorXcd uplink_channel(const Eigen::VectorXcd& z_art,
                                const matching::FrontEndReduction& rx,
                                const UePhysicalConfig& ue);

struct DownlinkChannel {
  Eigen::VectorXcd d;  // physical channel
  Eigen::VectorXcd h;  // B_dl^{-T/2} d
};

/// d_k^dl = alpha_dl (Z_G I + Z_T)^{-1} F_T z_ART,k and h_k^dl = B^{-T/2} d.
DownlinkChannel downlink_channel(const Eigen::VectorXcd& z_art,
                                 const matching::FrontEndReduction& tx,
                                 const UePhysicalConfig& ue);

/// Predict the downlink channel from the uplink one using the duality
/// relation for the given matching kind (scalar ratio under full matching,
/// alpha ratio without networks, full linear map otherwise).
Eigen::VectorXcd duality_transform(const Eigen::VectorXcd& h_ul,
                                   const matching::FrontEndReduction& rx_ul,
                                   const matching::FrontEndReduction& tx_dl,
                                   matching::MatchingKind kind,
                                   const UePhysicalConfig& ue);

/// Signal variance p = 4 R_G P_T / c with c = 1 V^2.
double power_mapping(double tx_power_watts, double r_gen);

/// Downlink per-UE noise variance (full UE noise matching).
double downlink_noise_variance(const UePhysicalConfig& ue,
                               const noise::NoisePhysics& phys);

/// B^{-T/2} x, using the principal Hermitian root of b.
Eigen::MatrixXcd apply_b_inverse_transpose_sqrt(const Eigen::MatrixXcd& b,
                                                const Eigen::MatrixXcd& x);

}  // namespace hmimo::channel

#endif
