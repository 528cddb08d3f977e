// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/link.hpp"

#include <cmath>
#include <stdexcept>

#include "hmimo/linalg.hpp"

namespace hmimo::link {
namespace {

Eigen::MatrixXcd gram_plus_noise(const Eigen::MatrixXcd& h_all,
                                 const Eigen::VectorXd& p,
                                 const Eigen::MatrixXcd& r_n) {
  Eigen::MatrixXcd g = r_n;
  for (int i = 0; i < h_all.cols(); ++i) {
    g.noalias() += p(i) * h_all.col(i) * h_all.col(i).adjoint();
  }
  return g;
}

}  // namespace

Eigen::VectorXcd mr_combiner(const Eigen::VectorXcd& h_k) {
  const double norm = h_k.norm();
  if (norm == 0.0) throw std::domain_error("mr_combiner: zero channel");
  return h_k / norm;
}

Eigen::VectorXcd mmse_combiner(const Eigen::MatrixXcd& h_all,
                               const Eigen::VectorXd& p,
                               const Eigen::MatrixXcd& r_n, int k) {
  if (h_all.col(k).norm() == 0.0) throw std::domain_error("mmse_combiner: zero channel");
  const Eigen::MatrixXcd g = gram_plus_noise(h_all, p, r_n);
  Eigen::LLT<Eigen::MatrixXcd> llt(g);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("mmse_combiner: covariance not positive definite");
  }
  return llt.solve(h_all.col(k));
}

double uplink_sinr(const Eigen::VectorXcd& u, const Eigen::MatrixXcd& h_all,
                   const Eigen::VectorXd& p, const Eigen::MatrixXcd& r_n, int k) {
  const double signal = p(k) * std::norm(u.dot(h_all.col(k)));
  double denom = (u.adjoint() * r_n * u).value().real();
  for (int i = 0; i < h_all.cols(); ++i) {
    if (i == k) continue;
    denom += p(i) * std::norm(u.dot(h_all.col(i)));
  }
  return signal / denom;
}

LinkResult uplink_link(const Eigen::MatrixXcd& h_all, const Eigen::VectorXd& p,
                       const Eigen::MatrixXcd& r_n, Processing processing) {
  const int k_total = static_cast<int>(h_all.cols());
  LinkResult out;
  out.processing = processing;
  out.sinr.resize(k_total);
  out.se.resize(k_total);

  Eigen::LLT<Eigen::MatrixXcd> llt;
  if (processing == Processing::Mmse) {
    llt.compute(gram_plus_noise(h_all, p, r_n));
    if (llt.info() != Eigen::Success) {
      throw std::runtime_error("uplink_link: covariance not positive definite");
    }
  }
  for (int k = 0; k < k_total; ++k) {
    const Eigen::VectorXcd u = processing == Processing::MaxRatio
                                   ? mr_combiner(h_all.col(k)).eval()
                                   : llt.solve(h_all.col(k)).eval();
    out.sinr(k) = uplink_sinr(u, h_all, p, r_n, k);
    out.se(k) = std::log2(1.0 + out.sinr(k));
  }
  return out;
}

Eigen::MatrixXcd downlink_precoders(const Eigen::MatrixXcd& h_all,
                                    const Eigen::VectorXd& p, double sigma2,
                                    Processing processing) {
  const Eigen::Index m = h_all.rows();
  const int k_total = static_cast<int>(h_all.cols());
  Eigen::MatrixXcd w(m, k_total);
  Eigen::LLT<Eigen::MatrixXcd> llt;
  if (processing == Processing::Mmse) {
    const Eigen::MatrixXcd r_n = sigma2 * Eigen::MatrixXcd::Identity(m, m);
    llt.compute(gram_plus_noise(h_all, p, r_n));
    if (llt.info() != Eigen::Success) {
      throw std::runtime_error("downlink_precoders: covariance not positive definite");
    }
  }
  for (int k = 0; k < k_total; ++k) {
    Eigen::VectorXcd wk = processing == Processing::MaxRatio
                              ? h_all.col(k).eval()
                              : llt.solve(h_all.col(k)).eval();
    const double norm = wk.norm();
    if (norm == 0.0) throw std::domain_error("downlink_precoders: zero channel");
    w.col(k) = wk / norm;
  }
  return w;
}

LinkResult downlink_sinr_with_precoders(const Eigen::MatrixXcd& w,
                                        const Eigen::MatrixXcd& h_all,
                                        const Eigen::VectorXd& p, double sigma2,
                                        Processing processing) {
  if (sigma2 <= 0.0) {
    throw std::domain_error("downlink_sinr_with_precoders: sigma2 must be > 0");
  }
  const int k_total = static_cast<int>(h_all.cols());
  LinkResult out;
  out.processing = processing;
  out.sinr.resize(k_total);
  out.se.resize(k_total);
  for (int k = 0; k < k_total; ++k) {
    const double signal = p(k) * std::norm(w.col(k).dot(h_all.col(k)));
    double denom = sigma2;
    for (int i = 0; i < k_total; ++i) {
      if (i == k) continue;
      denom += p(i) * std::norm(w.col(i).dot(h_all.col(k)));
    }
    out.sinr(k) = signal / denom;
    out.se(k) = std::log2(1.0 + out.sinr(k));
  }
  return out;
}

LinkResult downlink_precoders_and_sinr(const Eigen::MatrixXcd& h_all,
                                       const Eigen::VectorXd& p, double sigma2,
                                       Processing processing) {
  return downlink_sinr_with_precoders(downlink_precoders(h_all, p, sigma2, processing),
                                      h_all, p, sigma2, processing);
}

namespace {

// Builds the matched receive chain for an arbitrary element count and
// returns the per-UE uplink channels and noise covariance.
struct MatchedChain {
  Eigen::MatrixXcd h;    // M x K
  Eigen::MatrixXcd r_n;  // M x M
};

MatchedChain matched_uplink_chain(const TwoElementCase& c, int count,
                                  const std::vector<em::PlanePath>& paths) {
  const em::ArrayGeometry geom = em::ArrayGeometry::uniform_linear(count, c.spacing);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, c.dipole);
  const matching::TwoPortBlocks net = matching::synthesize_noise_matching(z_ar, c.lna);
  const matching::FrontEndReduction rx = matching::reduce_front_end(
      {matching::MatchingKind::Full, matching::Side::Receive}, net, z_ar, c.z_load_bs);
  MatchedChain out;
  out.h.resize(count, static_cast<Eigen::Index>(paths.size()));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Eigen::VectorXcd z_art = em::z_art_los({paths[i]}, geom, c.dipole, c.dipole);
    out.h.col(static_cast<Eigen::Index>(i)) = channel::uplink_channel(z_art, rx, c.ue);
  }
  out.r_n = noise::total_noise_cov(rx.q, noise::intrinsic_cov(rx.z_eff, c.lna),
                                   noise::extrinsic_cov(z_ar, c.physics), rx.f);
  return out;
}

}  // namespace

double array_gain_pipeline(const TwoElementCase& c) {
  const Eigen::VectorXd p = Eigen::VectorXd::Ones(1);
  const MatchedChain two = matched_uplink_chain(c, 2, {c.ue1});
  const MatchedChain one = matched_uplink_chain(c, 1, {c.ue1});
  const double snr2 = uplink_sinr(mr_combiner(two.h.col(0)), two.h, p, two.r_n, 0);
  const double snr1 = uplink_sinr(mr_combiner(one.h.col(0)), one.h, p, one.r_n, 0);
  return snr2 / snr1;
}

double interference_gain_pipeline(const TwoElementCase& c) {
  const Eigen::VectorXd p = Eigen::VectorXd::Ones(2);
  const MatchedChain two = matched_uplink_chain(c, 2, {c.ue1, c.ue2});
  const MatchedChain one = matched_uplink_chain(c, 1, {c.ue1, c.ue2});
  // Normalized interference of UE 2 into UE 1 under MR combining.
  const auto interference = [&](const MatchedChain& chain) {
    const Eigen::VectorXcd u = chain.h.col(0);
    const double num = std::norm(u.dot(chain.h.col(1)));
    const double den = (u.adjoint() * chain.r_n * u).value().real();
    return num / den;
  };
  return interference(two) / interference(one);
}

}  // namespace hmimo::link
