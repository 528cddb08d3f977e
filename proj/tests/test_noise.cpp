// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "hmimo/constants.hpp"
#include "hmimo/em.hpp"
#include "hmimo/linalg.hpp"
#include "hmimo/noise.hpp"
#include "hmimo/rng.hpp"

using namespace hmimo;
using namespace hmimo::noise;
using Catch::Approx;
using cplx = std::complex<double>;

namespace {

const em::DipoleParams dip = em::DipoleParams::half_wave(1.0);
const NoisePhysics phys{290.0, 20e6};
const matching::LnaParams lna =
    matching::LnaParams::from_bandwidth(5.0, {0.1, 0.0}, 290.0, 20e6);
const cplx z_load(186.0, -31.6);

Eigen::MatrixXcd random_symmetric(SplitMix64& rng, int n) {
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      m(r, c) = cplx(rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0));
      m(c, r) = m(r, c);
    }
  return m;
}

}  // namespace

TEST_CASE("extrinsic covariance arithmetic") {
  Eigen::MatrixXcd z(1, 1);
  z(0, 0) = 73.073;
  const double expected = 4.0 * boltzmann * 290.0 * 20e6 * 73.073;
  CHECK(extrinsic_cov(z, phys)(0, 0).real() == Approx(expected).epsilon(1e-14));
  CHECK(expected == Approx(2.34e-11).epsilon(0.01));

  // doubling the bandwidth doubles the covariance
  const NoisePhysics wide{290.0, 40e6};
  CHECK(extrinsic_cov(z, wide)(0, 0).real() == Approx(2.0 * expected).epsilon(1e-14));

  // purely reactive antennas generate no extrinsic noise
  z(0, 0) = cplx(0.0, 55.0);
  CHECK(extrinsic_cov(z, phys).norm() == 0.0);
}

TEST_CASE("intrinsic covariance special cases") {
  SECTION("matched front end gives the closed-form diagonal") {
    const cplx z_opt = lna.optimal_impedance();
    const Eigen::MatrixXcd z_r = z_opt * Eigen::MatrixXcd::Identity(3, 3);
    const Eigen::MatrixXcd u = intrinsic_cov(z_r, lna);
    const double rn = lna.noise_resistance;
    const double expected =
        lna.current_noise_var *
        (std::norm(z_opt) - 2.0 * rn * (std::conj(lna.rho) * z_opt).real() + rn * rn);
    for (int i = 0; i < 3; ++i) CHECK(u(i, i).real() == Approx(expected));
    CHECK((u - expected * Eigen::MatrixXcd::Identity(3, 3)).norm() <= 1e-12 * u.norm());
  }
  SECTION("zero correlation and zero impedance leave the voltage source") {
    matching::LnaParams rho0 = lna;
    rho0.rho = 0.0;
    const Eigen::MatrixXcd u =
        intrinsic_cov(Eigen::MatrixXcd::Zero(2, 2), rho0);
    const double expected = rho0.current_noise_var * rho0.noise_resistance *
                            rho0.noise_resistance;
    CHECK((u - expected * Eigen::MatrixXcd::Identity(2, 2)).norm() == 0.0);
  }
  SECTION("Hermitian PSD on random symmetric impedances") {
    SplitMix64 rng(41);
    for (int t = 0; t < 50; ++t) {
      const Eigen::MatrixXcd u = intrinsic_cov(random_symmetric(rng, 4), lna);
      CHECK(is_hermitian(u, 1e-12));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(u);
      CHECK(es.eigenvalues().minCoeff() >= -1e-12 * es.eigenvalues().maxCoeff());
    }
  }
}

TEST_CASE("total noise covariance under full matching") {
  const auto geom = em::ArrayGeometry::uniform_linear(4, 0.25);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
  const auto net = matching::synthesize_noise_matching(z_ar, lna);
  const auto rx = matching::reduce_front_end(
      {matching::MatchingKind::Full, matching::Side::Receive}, net, z_ar, z_load, lna);
  const Eigen::MatrixXcd r_eta = total_noise_cov(
      rx.q, intrinsic_cov(rx.z_eff, lna), extrinsic_cov(z_ar, phys), rx.f);

  const cplx z_opt = lna.optimal_impedance();
  const double expected =
      std::norm(z_load / (z_load + z_opt)) * matched_noise_variance(lna, phys);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(r_eta(i, i).real() - expected) <= 1e-12 * expected);
  }
  CHECK((r_eta - expected * Eigen::MatrixXcd::Identity(4, 4)).norm() <=
        1e-10 * r_eta.norm());
}

TEST_CASE("total noise covariance of zero input is zero") {
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(3, 3);
  const Eigen::MatrixXcd q = 0.5 * Eigen::MatrixXcd::Identity(3, 3);
  CHECK(total_noise_cov(q, zero, zero, Eigen::MatrixXcd::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("noise covariance is Hermitian PSD across matching kinds") {
  SplitMix64 rng(7);
  using matching::MatchingKind;
  for (int t = 0; t < 500; ++t) {
    const int m = 1 + static_cast<int>(rng.uniform(0.0, 6.0));
    const double spacing = rng.uniform(0.05, 1.0);
    const auto geom = em::ArrayGeometry::uniform_linear(m, spacing);
    const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
    const MatchingKind kinds[] = {MatchingKind::Full, MatchingKind::SelfImpedance,
                                  MatchingKind::None};
    const MatchingKind kind = kinds[t % 3];
    matching::FrontEndReduction rx;
    if (kind == MatchingKind::Full) {
      rx = matching::reduce_front_end({kind, matching::Side::Receive},
                                      matching::synthesize_noise_matching(z_ar, lna),
                                      z_ar, z_load, lna);
    } else {
      rx = matching::reduce_front_end({kind, matching::Side::Receive}, {}, z_ar, z_load,
                                      lna);
    }
    const Eigen::MatrixXcd r_eta = total_noise_cov(
        rx.q, intrinsic_cov(rx.z_eff, lna), extrinsic_cov(z_ar, phys), rx.f);
    CHECK(is_hermitian(r_eta, 1e-10));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r_eta);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * es.eigenvalues().maxCoeff());
  }
}

TEST_CASE("unmatched noise stays correlated at half-wavelength spacing") {
  const auto geom = em::ArrayGeometry::uniform_linear(4, 0.5);
  const Eigen::MatrixXcd z_ar = em::coupling_matrix(geom, dip);
  const auto rx = matching::reduce_front_end(
      {matching::MatchingKind::None, matching::Side::Receive}, {}, z_ar, z_load, lna);
  const Eigen::MatrixXcd u =
      intrinsic_cov(rx.z_eff, lna) + rx.f * extrinsic_cov(z_ar, phys) * rx.f.adjoint();
  double offdiag = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) offdiag = std::max(offdiag, std::abs(u(r, c)));
  CHECK(offdiag > 0.01 * std::abs(u(0, 0)));
}
