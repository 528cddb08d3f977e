// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_LINK_HPP
#define HMIMO_LINK_HPP

#include <Eigen/Dense>

#include "hmimo/channel.hpp"
#include "hmimo/em.hpp"

namespace hmimo::link {

enum class Processing { MaxRatio, Mmse };

struct LinkResult {
  Eigen::VectorXd sinr;  // per UE, linear
  Eigen::VectorXd se;    // per UE, bit/s/Hz
  Processing processing = Processing::Mmse;
};

/// Unit-norm maximum-ratio combiner h_k / ||h_k||.
Eigen::VectorXcd mr_combiner(const Eigen::VectorXcd& h_k);

/// MMSE combiner (sum_i p_i h_i h_i^H + R_n)^{-1} h_k, solved as a Hermitian
/// system.
Eigen::VectorXcd mmse_combiner(const Eigen::MatrixXcd& h_all,
                               const Eigen::VectorXd& p,
                               const Eigen::MatrixXcd& r_n, int k);

/// gamma_k = p_k |u^H h_k|^2 / (sum_{i != k} p_i |u^H h_i|^2 + u^H R_n u).
double uplink_sinr(const Eigen::VectorXcd& u, const Eigen::MatrixXcd& h_all,
                   const Eigen::VectorXd& p, const Eigen::MatrixXcd& r_n, int k);

/// Per-UE uplink SINR/SE for all UEs with the chosen combiner.
LinkResult uplink_link(const Eigen::MatrixXcd& h_all, const Eigen::VectorXd& p,
                       const Eigen::MatrixXcd& r_n, Processing processing);

/// Unit-norm downlink precoders (MR or MMSE) computed from the given
/// channels; returned as an M x K matrix.
Eigen::MatrixXcd downlink_precoders(const Eigen::MatrixXcd& h_all,
                                    const Eigen::VectorXd& p, double sigma2,
                                    Processing processing);

/// gamma_k = p_k |w_k^H h_k|^2 / (sum_{i != k} p_i |w_i^H h_k|^2 + sigma2)
/// for externally supplied precoders.
LinkResult downlink_sinr_with_precoders(const Eigen::MatrixXcd& w,
                                        const Eigen::MatrixXcd& h_all,
                                        const Eigen::VectorXd& p, double sigma2,
                                        Processing processing);

/// Precode and evaluate on the same channel set.
LinkResult downlink_precoders_and_sinr(const Eigen::MatrixXcd& h_all,
                                       const Eigen::VectorXd& p, double sigma2,
                                       Processing processing);

/// Fixture shared by the two-element reference pipelines: a pair of
/// side-by-side dipoles with full noise matching, single-path LoS.
struct TwoElementCase {
  double spacing;        // d_H [m]
  em::PlanePath ue1;     // desired UE direction
  em::PlanePath ue2;     // interfering UE direction (interference gain only)
  em::DipoleParams dipole;
  matching::LnaParams lna;
  noise::NoisePhysics physics;
  std::complex<double> z_load_bs{186.0, -31.6};
  channel::UePhysicalConfig ue;
};

/// Uplink SNR of UE 1 with M = 2 divided by the SNR with a single element of
/// the same array, everything else equal.
double array_gain_pipeline(const TwoElementCase& c);

/// MR interference term of UE 2 into UE 1 with M = 2 divided by its
/// single-antenna analogue.
double interference_gain_pipeline(const TwoElementCase& c);

}  // namespace hmimo::link

#endif
