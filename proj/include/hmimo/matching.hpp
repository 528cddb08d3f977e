// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_MATCHING_HPP
#define HMIMO_MATCHING_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace hmimo::matching {

enum class MatchingKind { Full, SelfImpedance, None };
enum class Side { Transmit, Receive };

struct MatchingSpec {
  MatchingKind kind = MatchingKind::Full;
  Side side = Side::Receive;
};

/// 2N x 2N lossless reciprocal matching network in block impedance form.
/// Synthesized networks have purely imaginary blocks and z12 = z21^T.
struct TwoPortBlocks {
  Eigen::MatrixXcd z11, z12, z21, z22;
};

/// Two-generator LNA noise model.
struct LnaParams {
  double noise_resistance = 5.0;           // R_N [ohm]
  std::complex<double> rho{0.1, 0.0};      // |rho| <= 1
  double current_noise_var = 0.0;          // sigma_i^2 [A^2]

  /// Z_opt = R_N (sqrt(1 - Im{rho}^2) + j Im{rho}).
  std::complex<double> optimal_impedance() const;

  /// sigma_i^2 = 2 k_B B_W T_A / R_N, the front-end datasheet rule used for
  /// every appearance of the current-noise variance.
  static LnaParams from_bandwidth(double noise_resistance, std::complex<double> rho,
                                  double antenna_temp_k, double bandwidth_hz);
};

/// Effective one-side description after eliminating the matching network:
/// F (signal transfer), Z_eff (driving-point impedance seen from the
/// terminations), plus Q on the receive side and B on the transmit side.
struct FrontEndReduction {
  Eigen::MatrixXcd f;
  Eigen::MatrixXcd z_eff;
  Eigen::MatrixXcd q;  // receive side only
  Eigen::MatrixXcd b;  // transmit side only
  std::complex<double> termination;  // Z_L (receive) or Z_G (transmit)
  MatchingKind kind = MatchingKind::None;
  Side side = Side::Receive;
};

/// Transmit network for maximum power transfer: Z_T becomes conj(Z_G) I and
/// B becomes the identity.
TwoPortBlocks synthesize_power_matching(const Eigen::MatrixXcd& z_at,
                                        std::complex<double> z_gen);

/// Receive network for SNR maximization: Z_R becomes Z_opt I.
TwoPortBlocks synthesize_noise_matching(const Eigen::MatrixXcd& z_ar,
                                        const LnaParams& lna);

/// Reduce one side of the front end.  kind == Full requires synthesized
/// blocks; kind == None requires none; kind == SelfImpedance synthesizes
/// per-antenna networks from diag(z_a) internally (needs `lna` on the
/// receive side) and then reduces against the fully coupled z_a.
FrontEndReduction reduce_front_end(const MatchingSpec& spec,
                                   const std::optional<TwoPortBlocks>& blocks,
                                   const Eigen::MatrixXcd& z_a,
                                   std::complex<double> termination,
                                   const std::optional<LnaParams>& lna = {});

/// B = 4 R_G (Z_G I + Z_T)^{-H} Re{Z_T} (Z_G I + Z_T)^{-1}; Hermitian, with
/// eigenvalues in [0, 1] for passive Z_T, and exactly I under power matching.
Eigen::MatrixXcd b_matrix(std::complex<double> z_gen, const Eigen::MatrixXcd& z_t);

}  // namespace hmimo::matching

#endif
