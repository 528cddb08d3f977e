// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_SCENARIO_HPP
#define HMIMO_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hmimo/channel.hpp"
#include "hmimo/em.hpp"
#include "hmimo/link.hpp"
#include "hmimo/matching.hpp"
#include "hmimo/noise.hpp"
#include "hmimo/rng.hpp"

namespace hmimo::scenario {

/// Front-end constants of the base station (and, mirrored, of each UE).
/// Defaults reproduce the reference numerical setup: 3.5 GHz carrier,
/// 20 MHz bandwidth, Z_G = Z_L = 186 - j31.6 ohm, T_A = 290 K, R_N = 5 ohm,
/// rho = 0.1, R_d = 1e-3 R_r, P_T = -30 dBW.
struct RadioFrontEnd {
  double carrier_hz = 3.5e9;
  double bandwidth_hz = 20e6;
  std::complex<double> z_gen{186.0, -31.6};
  std::complex<double> z_load{186.0, -31.6};
  double antenna_temp_k = 290.0;
  double lna_noise_resistance = 5.0;
  std::complex<double> lna_rho{0.1, 0.0};
  double dissipation_ratio = 1e-3;
  double dipole_radius_over_lambda = 1e-3;
  double tx_power_w = 1e-3;

  double wavelength() const;
  em::DipoleParams dipole() const;
  matching::LnaParams lna() const;
  noise::NoisePhysics physics() const;
  /// UE front end: same dipole, LNA and terminations as the BS.
  channel::UePhysicalConfig ue(const em::DipoleParams& dipole) const;
};

struct ScenarioConfig {
  // Geometry sweep; aperture_lambdas > 0 selects the fixed-aperture mode
  // with M = floor(L_H/d_H) + 1, otherwise num_antennas is used as is.
  int num_antennas = 16;
  double aperture_lambdas = 0.0;
  std::vector<double> spacing_lambdas = {0.1, 0.25, 0.5, 0.75, 1.0};
  int num_ues = 10;

  // UE drop model: azimuth uniform in the sector, horizontal distance
  // uniform in [min, max] (or uniform in area), elevation from the BS
  // height.
  double azimuth_min_rad = -1.5707963267948966;
  double azimuth_max_rad = 1.5707963267948966;
  double distance_min_m = 15.0;
  double distance_max_m = 150.0;
  double bs_height_m = 10.0;
  bool uniform_in_area = false;

  std::vector<matching::MatchingKind> matching_kinds = {
      matching::MatchingKind::Full};
  /// Downlink transmit-side kind; when unset each cell uses its receive kind
  /// on both sides.
  std::optional<matching::MatchingKind> matching_tx_override;
  link::Processing processing = link::Processing::Mmse;
  int drops = 200;
  std::uint64_t seed = 1;
  /// Downlink only: compute precoders from the uplink channels without the
  /// duality correction (reproduces the mismatched-precoder experiment).
  bool use_ul_channels_for_precoding = false;

  RadioFrontEnd frontend;

  int elements_for(double spacing_lambdas) const;
};

struct SweepCell {
  double spacing_lambdas = 0.0;
  int elements = 0;
  matching::MatchingKind kind = matching::MatchingKind::Full;
  link::Processing processing = link::Processing::Mmse;
  double mean_se = 0.0;      // bit/s/Hz per UE
  double stderr_se = 0.0;    // Monte Carlo standard error of the mean
  double mean_gain_db = 0.0; // mean channel gain per antenna, dB
  int drops = 0;
  std::uint64_t seed = 0;
};

struct SweepResult {
  std::vector<SweepCell> cells;
};

/// One UE drop: per-UE single-path LoS directions and distances.
std::vector<em::PlanePath> sample_drop(SplitMix64& rng, const ScenarioConfig& config);

SweepResult run_uplink(const ScenarioConfig& config);
SweepResult run_downlink(const ScenarioConfig& config);

enum class SpectrumKind { CouplingMatrix, NoiseCorrelation };

/// Eigenvalues of Re{Z_AR} (or of the pre-Q noise correlation U built with
/// the first configured matching kind), sorted descending and normalized to
/// a unit maximum.
Eigen::VectorXd eigen_spectrum(SpectrumKind kind, const ScenarioConfig& config,
                               double spacing_lambdas);

}  // namespace hmimo::scenario

#endif
