// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/scenario.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "hmimo/constants.hpp"
#include "hmimo/linalg.hpp"

namespace hmimo::scenario {
namespace {

using matching::FrontEndReduction;
using matching::MatchingKind;
using matching::MatchingSpec;
using matching::Side;

// Runs fn(drop_index) for every drop on a small static-partition thread
// pool; each drop writes only its own output slots, so scheduling cannot
// change the result.
void parallel_drops(int drops, const std::function<void(int)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 16));
  if (workers <= 1 || drops < 4) {
    for (int d = 0; d < drops; ++d) fn(d);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int d = w; d < drops; d += workers) fn(d);
    });
  }
  for (auto& t : pool) t.join();
}

// Everything that is fixed across drops for one (spacing, matching) cell.
struct CellOperators {
  em::ArrayGeometry geom;
  Eigen::MatrixXcd z_ar;
  FrontEndReduction rx;
  FrontEndReduction tx;
  Eigen::MatrixXcd t_ul;    // h_ul = t_ul * z_art
  Eigen::MatrixXcd t_dl;    // h_dl = t_dl * z_art
  Eigen::MatrixXcd r_n_ul;  // uplink noise covariance
  double sigma_dl2 = 0.0;
};

FrontEndReduction reduce_side(MatchingKind kind, Side side,
                              const Eigen::MatrixXcd& z_a,
                              std::complex<double> termination,
                              const matching::LnaParams& lna) {
  const MatchingSpec spec{kind, side};
  switch (kind) {
    case MatchingKind::Full: {
      const matching::TwoPortBlocks net =
          side == Side::Receive ? matching::synthesize_noise_matching(z_a, lna)
                                : matching::synthesize_power_matching(z_a, termination);
      return matching::reduce_front_end(spec, net, z_a, termination, lna);
    }
    case MatchingKind::SelfImpedance:
      return matching::reduce_front_end(spec, {}, z_a, termination, lna);
    case MatchingKind::None:
      return matching::reduce_front_end(spec, {}, z_a, termination, lna);
  }
  throw std::logic_error("reduce_side: unknown matching kind");
}

CellOperators build_cell(const ScenarioConfig& config, double spacing_lambdas,
                         MatchingKind kind, bool need_downlink) {
  const RadioFrontEnd& fe = config.frontend;
  const double lambda = fe.wavelength();
  const em::DipoleParams dipole = fe.dipole();
  const matching::LnaParams lna = fe.lna();
  const channel::UePhysicalConfig ue = fe.ue(dipole);

  CellOperators cell;
  cell.geom = em::ArrayGeometry::uniform_linear(config.elements_for(spacing_lambdas),
                                                spacing_lambdas * lambda);
  cell.z_ar = em::coupling_matrix(cell.geom, dipole);
  cell.rx = reduce_side(kind, Side::Receive, cell.z_ar, fe.z_load, lna);

  const Eigen::Index m = cell.z_ar.rows();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(m, m);
  cell.t_ul = channel::alpha_uplink(fe.z_load, ue) *
              lu_solve(fe.z_load * identity + cell.rx.z_eff, cell.rx.f, "run/t_ul");
  cell.r_n_ul = noise::total_noise_cov(cell.rx.q, noise::intrinsic_cov(cell.rx.z_eff, lna),
                                       noise::extrinsic_cov(cell.z_ar, fe.physics()),
                                       cell.rx.f);

  if (need_downlink) {
    const MatchingKind tx_kind = config.matching_tx_override.value_or(kind);
    cell.tx = reduce_side(tx_kind, Side::Transmit, cell.z_ar, fe.z_gen, lna);
    const Eigen::MatrixXcd d_op =
        channel::alpha_downlink(ue) *
        lu_solve(fe.z_gen * identity + cell.tx.z_eff, cell.tx.f, "run/t_dl");
    cell.t_dl = channel::apply_b_inverse_transpose_sqrt(cell.tx.b, d_op);
    cell.sigma_dl2 = channel::downlink_noise_variance(ue, fe.physics());
  }
  return cell;
}

Eigen::MatrixXcd drop_z_art(const std::vector<em::PlanePath>& paths,
                            const em::ArrayGeometry& geom,
                            const em::DipoleParams& dipole) {
  Eigen::MatrixXcd z(geom.count, static_cast<Eigen::Index>(paths.size()));
  for (std::size_t k = 0; k < paths.size(); ++k) {
    z.col(static_cast<Eigen::Index>(k)) = em::z_art_los({paths[k]}, geom, dipole, dipole);
  }
  return z;
}

SweepResult run_impl(const ScenarioConfig& config, bool downlink) {
  if (config.drops < 1) throw std::invalid_argument("run: drops must be >= 1");
  if (config.num_ues < 1) throw std::invalid_argument("run: ues must be >= 1");

  const RadioFrontEnd& fe = config.frontend;
  const em::DipoleParams dipole = fe.dipole();
  const channel::UePhysicalConfig ue = fe.ue(dipole);
  const double p_per_ue = channel::power_mapping(
      fe.tx_power_w, downlink ? fe.z_gen.real() : ue.z_gen_ul.real());
  const Eigen::VectorXd p = Eigen::VectorXd::Constant(config.num_ues, p_per_ue);

  SweepResult result;
  for (double spacing : config.spacing_lambdas) {
    for (MatchingKind kind : config.matching_kinds) {
      const CellOperators cell = build_cell(config, spacing, kind, downlink);

      std::vector<double> drop_se(config.drops, 0.0);
      std::vector<double> drop_gain(config.drops, 0.0);
      parallel_drops(config.drops, [&](int d) {
        SplitMix64 rng = SplitMix64::substream(config.seed, static_cast<std::uint64_t>(d));
        const std::vector<em::PlanePath> paths = sample_drop(rng, config);
        const Eigen::MatrixXcd z_art = drop_z_art(paths, cell.geom, dipole);
        const Eigen::MatrixXcd h_dl_or_ul =
            (downlink ? cell.t_dl : cell.t_ul) * z_art;

        link::LinkResult lr;
        if (downlink) {
          Eigen::MatrixXcd basis = h_dl_or_ul;
          if (config.use_ul_channels_for_precoding) basis = cell.t_ul * z_art;
          const Eigen::MatrixXcd w = link::downlink_precoders(
              basis, p, cell.sigma_dl2, config.processing);
          lr = link::downlink_sinr_with_precoders(w, h_dl_or_ul, p, cell.sigma_dl2,
                                                  config.processing);
        } else {
          lr = link::uplink_link(h_dl_or_ul, p, cell.r_n_ul, config.processing);
        }
        drop_se[d] = lr.se.mean();
        drop_gain[d] = h_dl_or_ul.squaredNorm() /
                       (static_cast<double>(config.num_ues) * cell.geom.count);
      });

      SweepCell out;
      out.spacing_lambdas = spacing;
      out.elements = cell.geom.count;
      out.kind = kind;
      out.processing = config.processing;
      out.drops = config.drops;
      out.seed = config.seed;
      double sum = 0.0, sum2 = 0.0, gain = 0.0;
      for (int d = 0; d < config.drops; ++d) {
        sum += drop_se[d];
        sum2 += drop_se[d] * drop_se[d];
        gain += drop_gain[d];
      }
      out.mean_se = sum / config.drops;
      const double var =
          std::max(0.0, sum2 / config.drops - out.mean_se * out.mean_se);
      out.stderr_se = config.drops > 1 ? std::sqrt(var / (config.drops - 1)) : 0.0;
      out.mean_gain_db = 10.0 * std::log10(gain / config.drops);
      result.cells.push_back(out);
    }
  }
  return result;
}

}  // namespace

double RadioFrontEnd::wavelength() const { return speed_of_light / carrier_hz; }

em::DipoleParams RadioFrontEnd::dipole() const {
  return em::DipoleParams::half_wave(wavelength(), dipole_radius_over_lambda,
                                     dissipation_ratio);
}

matching::LnaParams RadioFrontEnd::lna() const {
  return matching::LnaParams::from_bandwidth(lna_noise_resistance, lna_rho,
                                             antenna_temp_k, bandwidth_hz);
}

noise::NoisePhysics RadioFrontEnd::physics() const {
  return {antenna_temp_k, bandwidth_hz};
}

channel::UePhysicalConfig RadioFrontEnd::ue(const em::DipoleParams& d) const {
  channel::UePhysicalConfig cfg;
  cfg.z_gen_ul = z_gen;
  cfg.z_load_dl = z_load;
  cfg.z_ant = em::self_impedance(d) + d.dissipation_resistance;
  cfg.lna = lna();
  return cfg;
}

int ScenarioConfig::elements_for(double spacing) const {
  if (aperture_lambdas > 0.0) {
    return static_cast<int>(std::floor(aperture_lambdas / spacing + 1e-9)) + 1;
  }
  return num_antennas;
}

std::vector<em::PlanePath> sample_drop(SplitMix64& rng, const ScenarioConfig& config) {
  std::vector<em::PlanePath> paths(config.num_ues);
  for (em::PlanePath& path : paths) {
    const double phi = rng.uniform(config.azimuth_min_rad, config.azimuth_max_rad);
    double horiz;
    if (config.uniform_in_area) {
      const double lo2 = config.distance_min_m * config.distance_min_m;
      const double hi2 = config.distance_max_m * config.distance_max_m;
      horiz = std::sqrt(rng.uniform(lo2, hi2));
    } else {
      horiz = rng.uniform(config.distance_min_m, config.distance_max_m);
    }
    path.azimuth = phi;
    path.elevation = -std::atan2(config.bs_height_m, horiz);
    path.distance = std::hypot(horiz, config.bs_height_m);
    path.gain = 1.0;
  }
  return paths;
}

SweepResult run_uplink(const ScenarioConfig& config) { return run_impl(config, false); }

SweepResult run_downlink(const ScenarioConfig& config) { return run_impl(config, true); }

Eigen::VectorXd eigen_spectrum(SpectrumKind kind, const ScenarioConfig& config,
                               double spacing_lambdas) {
  const RadioFrontEnd& fe = config.frontend;
  const em::DipoleParams dipole = fe.dipole();
  const em::ArrayGeometry geom = em::ArrayGeometry::uniform_linear(
      config.elements_for(spacing_lambdas), spacing_lambdas * fe.wavelength());
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dipole);

  Eigen::MatrixXcd target;
  if (kind == SpectrumKind::CouplingMatrix) {
    target = hermitian_part(z_ar);
  } else {
    const MatchingKind mk =
        config.matching_kinds.empty() ? MatchingKind::None : config.matching_kinds[0];
    const FrontEndReduction rx = reduce_side(mk, Side::Receive, z_ar, fe.z_load, fe.lna());
    target = noise::intrinsic_cov(rx.z_eff, fe.lna()) +
             rx.f * noise::extrinsic_cov(z_ar, fe.physics()) * rx.f.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(target);
  Eigen::VectorXd ev = es.eigenvalues().reverse();
  const double top = ev(0);
  if (top > 0.0) ev /= top;
  return ev;
}

}  // namespace hmimo::scenario
