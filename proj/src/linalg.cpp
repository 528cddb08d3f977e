// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/linalg.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace hmimo {

Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& a) {
  return 0.5 * (a + a.adjoint());
}

bool is_hermitian(const Eigen::MatrixXcd& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = a.norm();
  return (a - a.adjoint()).norm() <= tol * (scale > 0.0 ? scale : 1.0);
}

namespace {

Eigen::MatrixXcd sqrt_impl(const Eigen::MatrixXcd& a, bool invert) {
  if (!is_hermitian(a, 1e-10)) {
    throw std::invalid_argument("principal_sqrt: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian_part(a));
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("principal_sqrt: eigendecomposition failed");
  }
  Eigen::VectorXd ev = es.eigenvalues();
  const double max_ev = ev.size() > 0 ? ev.maxCoeff() : 0.0;
  const double clamp = -1e-12 * std::max(max_ev, 1.0);
  Eigen::VectorXd root(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < clamp) {
      throw std::invalid_argument("principal_sqrt: matrix is indefinite");
    }
    const double v = std::max(ev(i), 0.0);
    if (invert) {
      if (v == 0.0) {
        throw std::invalid_argument("principal_inv_sqrt: singular matrix");
      }
      root(i) = 1.0 / std::sqrt(v);
    } else {
      root(i) = std::sqrt(v);
    }
  }
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::MatrixXcd principal_sqrt(const Eigen::MatrixXcd& a) {
  return sqrt_impl(a, false);
}

Eigen::MatrixXcd principal_inv_sqrt(const Eigen::MatrixXcd& a) {
  return sqrt_impl(a, true);
}

Eigen::MatrixXcd lu_solve(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                          const char* context) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond > 0.0) || !std::isfinite(rcond)) {
    throw std::runtime_error(std::string(context) + ": singular linear system");
  }
  if (rcond < 1e-12) {
    std::fprintf(stderr, "hmimo: %s: ill-conditioned system (rcond=%.3e)\n",
                 context, rcond);
  }
  return lu.solve(b);
}

}  // namespace hmimo
