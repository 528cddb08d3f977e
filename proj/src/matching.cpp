// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/matching.hpp"

#include <cmath>
#include <stdexcept>

#include "hmimo/constants.hpp"
#include "hmimo/linalg.hpp"

namespace hmimo::matching {
namespace {

Eigen::MatrixXcd real_part_sqrt(const Eigen::MatrixXcd& z) {
  return principal_sqrt(hermitian_part(z));
}

}  // namespace

std::complex<double> LnaParams::optimal_impedance() const {
  const double im = rho.imag();
  if (std::abs(rho) > 1.0 + 1e-12) {
    throw std::domain_error("LnaParams: |rho| must be <= 1");
  }
  return noise_resistance * std::complex<double>(std::sqrt(1.0 - im * im), im);
}

LnaParams LnaParams::from_bandwidth(double noise_resistance, std::complex<double> rho,
                                    double antenna_temp_k, double bandwidth_hz) {
  LnaParams p;
  p.noise_resistance = noise_resistance;
  p.rho = rho;
  p.current_noise_var =
      2.0 * boltzmann * bandwidth_hz * antenna_temp_k / noise_resistance;
  return p;
}

TwoPortBlocks synthesize_power_matching(const Eigen::MatrixXcd& z_at,
                                        std::complex<double> z_gen) {
  const Eigen::Index n = z_at.rows();
  const double r_g = z_gen.real();
  if (r_g <= 0.0) {
    throw std::invalid_argument("synthesize_power_matching: Re{Z_G} must be > 0");
  }
  Eigen::MatrixXcd root;
  try {
    root = real_part_sqrt(z_at);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "synthesize_power_matching: Re{Z_AT} is not positive definite");
  }
  TwoPortBlocks b;
  b.z11 = -j1i * z_gen.imag() * Eigen::MatrixXcd::Identity(n, n);
  b.z12 = -j1i * std::sqrt(r_g) * root;
  b.z21 = b.z12;
  b.z22 = -j1i * z_at.imag().cast<std::complex<double>>();
  return b;
}

TwoPortBlocks synthesize_noise_matching(const Eigen::MatrixXcd& z_ar,
                                        const LnaParams& lna) {
  const Eigen::Index m = z_ar.rows();
  const std::complex<double> z_opt = lna.optimal_impedance();
  Eigen::MatrixXcd root;
  try {
    root = real_part_sqrt(z_ar);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "synthesize_noise_matching: Re{Z_AR} is not positive definite");
  }
  TwoPortBlocks b;
  b.z11 = j1i * z_opt.imag() * Eigen::MatrixXcd::Identity(m, m);
  b.z12 = j1i * std::sqrt(z_opt.real()) * root;
  b.z21 = b.z12;
  b.z22 = -j1i * z_ar.imag().cast<std::complex<double>>();
  return b;
}

Eigen::MatrixXcd b_matrix(std::complex<double> z_gen, const Eigen::MatrixXcd& z_t) {
  const Eigen::Index n = z_t.rows();
  const Eigen::MatrixXcd shifted =
      z_gen * Eigen::MatrixXcd::Identity(n, n) + z_t;
  const Eigen::MatrixXcd inv = lu_solve(shifted, Eigen::MatrixXcd::Identity(n, n),
                                        "b_matrix");
  return 4.0 * z_gen.real() * inv.adjoint() * hermitian_part(z_t) * inv;
}

FrontEndReduction reduce_front_end(const MatchingSpec& spec,
                                   const std::optional<TwoPortBlocks>& blocks,
                                   const Eigen::MatrixXcd& z_a,
                                   std::complex<double> termination,
                                   const std::optional<LnaParams>& lna) {
  const Eigen::Index n = z_a.rows();
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(n, n);

  FrontEndReduction out;
  out.termination = termination;
  out.kind = spec.kind;
  out.side = spec.side;

  std::optional<TwoPortBlocks> synth;
  const TwoPortBlocks* net = nullptr;
  switch (spec.kind) {
    case MatchingKind::None:
      if (blocks) {
        throw std::invalid_argument("reduce_front_end: kind=None takes no blocks");
      }
      break;
    case MatchingKind::Full:
      if (!blocks) {
        throw std::invalid_argument("reduce_front_end: kind=Full requires blocks");
      }
      net = &*blocks;
      break;
    case MatchingKind::SelfImpedance: {
      if (blocks) {
        throw std::invalid_argument(
            "reduce_front_end: kind=SelfImpedance synthesizes its own blocks");
      }
      // Per-antenna design from the diagonal of z_a; the reduction below
      // still uses the fully coupled matrix.
      const Eigen::MatrixXcd diag = z_a.diagonal().asDiagonal();
      if (spec.side == Side::Transmit) {
        synth = synthesize_power_matching(diag, termination);
      } else {
        if (!lna) {
          throw std::invalid_argument(
              "reduce_front_end: receive self-impedance matching needs LNA params");
        }
        synth = synthesize_noise_matching(diag, *lna);
      }
      net = &*synth;
      break;
    }
  }

  if (net == nullptr) {
    out.f = identity;
    out.z_eff = z_a;
  } else {
    out.f = lu_solve((net->z22 + z_a).transpose(), net->z12.transpose(),
                     "reduce_front_end")
                .transpose();  // F = Z_M12 (Z_M22 + Z_A)^{-1}
    out.z_eff = net->z11 - out.f * net->z21;
  }

  if (spec.side == Side::Receive) {
    out.q = termination *
            lu_solve(termination * identity + out.z_eff, identity, "reduce_front_end/Q");
  } else {
    out.b = b_matrix(termination, out.z_eff);
  }
  return out;
}

}  // namespace hmimo::matching
