// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "hmimo/channel.hpp"
#include "hmimo/constants.hpp"
#include "hmimo/em.hpp"
#include "hmimo/linalg.hpp"
#include "hmimo/link.hpp"
#include "hmimo/rng.hpp"
#include "support/fixtures.hpp"

using namespace hmimo;
using namespace hmimo::channel;
using Catch::Approx;
using cplx = std::complex<double>;
using matching::MatchingKind;
using matching::Side;

namespace {

const scenario::RadioFrontEnd fe = test::table_front_end();
const em::DipoleParams dip = fe.dipole();
const matching::LnaParams lna = fe.lna();
const UePhysicalConfig ue = fe.ue(dip);

Eigen::VectorXcd los_z_art(const em::ArrayGeometry& geom, double theta, double phi,
                           double distance) {
  return em::z_art_los({em::PlanePath{theta, phi, distance, 1.0}}, geom, dip, dip);
}

}  // namespace

TEST_CASE("uplink channel without matching reduces to the scalar formula") {
  const auto geom = em::ArrayGeometry::uniform_linear(1, 0.5 * dip.wavelength);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
  const auto rx = test::reduce(MatchingKind::None, Side::Receive, z_ar, fe.z_load, lna);
  const Eigen::VectorXcd z_art = los_z_art(geom, -0.2, 0.5, 50.0);
  const Eigen::VectorXcd h = uplink_channel(z_art, rx, ue);
  const cplx expected = alpha_uplink(fe.z_load, ue) * z_art(0) / (fe.z_load + z_ar(0, 0));
  CHECK(std::abs(h(0) - expected) <= 1e-14 * std::abs(expected));
}

TEST_CASE("uplink channel under full matching equals the closed form") {
  const auto geom = em::ArrayGeometry::uniform_linear(6, 0.2 * dip.wavelength);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
  const auto rx = test::reduce(MatchingKind::Full, Side::Receive, z_ar, fe.z_load, lna);
  const Eigen::VectorXcd z_art = los_z_art(geom, -0.1, -0.8, 70.0);
  const Eigen::VectorXcd h = uplink_channel(z_art, rx, ue);
  const cplx xi = xi_uplink(fe.z_load, lna.optimal_impedance(), ue);
  const Eigen::VectorXcd expected =
      xi * (principal_inv_sqrt(hermitian_part(z_ar)) * z_art);
  CHECK((h - expected).norm() <= 1e-10 * expected.norm());
}

TEST_CASE("uplink channel is linear in the coupling vector") {
  const auto geom = em::ArrayGeometry::uniform_linear(3, 0.3 * dip.wavelength);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
  const auto rx =
      test::reduce(MatchingKind::SelfImpedance, Side::Receive, z_ar, fe.z_load, lna);
  const Eigen::VectorXcd za = los_z_art(geom, -0.2, 0.4, 60.0);
  const Eigen::VectorXcd zb = los_z_art(geom, -0.1, -1.0, 90.0);
  const cplx w(1.3, -0.4);
  const Eigen::VectorXcd combined = uplink_channel(za + w * zb, rx, ue);
  const Eigen::VectorXcd split =
      uplink_channel(za, rx, ue) + w * uplink_channel(zb, rx, ue);
  CHECK((combined - split).norm() <= 1e-12 * split.norm());
}

TEST_CASE("downlink channel under BS power matching has B = I and h = d") {
  const auto geom = em::ArrayGeometry::uniform_linear(4, 0.25 * dip.wavelength);
  const Eigen::MatrixXcd z_at = em::coupling_matrix(geom, dip);
  const auto tx = test::reduce(MatchingKind::Full, Side::Transmit, z_at, fe.z_gen, lna);
  CHECK((tx.b - Eigen::MatrixXcd::Identity(4, 4)).norm() <= 1e-10);
  const Eigen::VectorXcd z_art = los_z_art(geom, -0.15, 0.9, 45.0);
  const DownlinkChannel dl = downlink_channel(z_art, tx, ue);
  CHECK((dl.h - dl.d).norm() <= 1e-10 * dl.d.norm());
}

TEST_CASE("full matching on both sides scales the uplink channel") {
  const auto geom = em::ArrayGeometry::uniform_linear(5, 0.4 * dip.wavelength);
  const Eigen::MatrixXcd z_a = em::coupling_matrix(geom, dip);
  const auto rx = test::reduce(MatchingKind::Full, Side::Receive, z_a, fe.z_load, lna);
  const auto tx = test::reduce(MatchingKind::Full, Side::Transmit, z_a, fe.z_gen, lna);
  const Eigen::VectorXcd z_art = los_z_art(geom, -0.05, 0.3, 100.0);
  const Eigen::VectorXcd h_ul = uplink_channel(z_art, rx, ue);
  const DownlinkChannel dl = downlink_channel(z_art, tx, ue);
  const cplx ratio =
      xi_downlink(fe.z_gen, ue) / xi_uplink(fe.z_load, lna.optimal_impedance(), ue);
  CHECK((dl.d - ratio * h_ul).norm() <= 1e-10 * dl.d.norm());
  // entrywise ratio is constant
  Eigen::VectorXcd ratios(5);
  for (int i = 0; i < 5; ++i) ratios(i) = dl.h(i) / h_ul(i);
  const cplx mean = ratios.mean();
  double var = 0.0;
  for (int i = 0; i < 5; ++i) var += std::norm(ratios(i) - mean);
  CHECK(var / 5.0 < 1e-20);
}

TEST_CASE("duality transform matches the independent downlink build") {
  for (MatchingKind kind :
       {MatchingKind::Full, MatchingKind::SelfImpedance, MatchingKind::None}) {
    for (int m : {2, 8}) {
      for (double spacing : {0.1, 0.5}) {
        const auto geom = em::ArrayGeometry::uniform_linear(m, spacing * dip.wavelength);
        const Eigen::MatrixXcd z_a = em::coupling_matrix(geom, dip);
        const auto rx = test::reduce(kind, Side::Receive, z_a, fe.z_load, lna);
        const auto tx = test::reduce(kind, Side::Transmit, z_a, fe.z_gen, lna);
        const Eigen::VectorXcd z_art = los_z_art(geom, -0.12, 0.6, 55.0);
        const Eigen::VectorXcd h_ul = uplink_channel(z_art, rx, ue);
        const Eigen::VectorXcd h_dl = downlink_channel(z_art, tx, ue).h;
        const Eigen::VectorXcd predicted = duality_transform(h_ul, rx, tx, kind, ue);
        INFO("kind " << static_cast<int>(kind) << " M " << m << " spacing " << spacing);
        CHECK((predicted - h_dl).norm() <= 1e-10 * h_dl.norm());
      }
    }
  }
}

TEST_CASE("global phase invariance of SINRs") {
  const auto geom = em::ArrayGeometry::uniform_linear(4, 0.3 * dip.wavelength);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
  const auto rx = test::reduce(MatchingKind::Full, Side::Receive, z_ar, fe.z_load, lna);
  const Eigen::MatrixXcd r_n = noise::total_noise_cov(
      rx.q, noise::intrinsic_cov(rx.z_eff, lna), noise::extrinsic_cov(z_ar, fe.physics()),
      rx.f);
  Eigen::MatrixXcd h(4, 2);
  h.col(0) = uplink_channel(los_z_art(geom, -0.2, 0.5, 50.0), rx, ue);
  h.col(1) = uplink_channel(los_z_art(geom, -0.1, -0.7, 80.0), rx, ue);
  const Eigen::VectorXd p = Eigen::VectorXd::Constant(2, 0.744);
  const auto base = link::uplink_link(h, p, r_n, link::Processing::Mmse);
  const Eigen::MatrixXcd rotated = std::exp(j1i * 1.234) * h;
  const auto rot = link::uplink_link(rotated, p, r_n, link::Processing::Mmse);
  CHECK(base.sinr(0) == Approx(rot.sinr(0)).epsilon(1e-12));
  CHECK(base.sinr(1) == Approx(rot.sinr(1)).epsilon(1e-12));
}

TEST_CASE("power mapping") {
  CHECK(power_mapping(1e-3, 186.0) == Approx(0.744));
  CHECK(power_mapping(2e-3, 186.0) == Approx(1.488));
  CHECK_THROWS_AS(power_mapping(0.0, 186.0), std::domain_error);
}
