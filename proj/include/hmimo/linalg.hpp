// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_LINALG_HPP
#define HMIMO_LINALG_HPP

#include <Eigen/Dense>

namespace hmimo {

/// (A + A^H)/2.  For the complex-symmetric impedance matrices produced by
/// reciprocal networks this equals the entrywise real part.
Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd& a);

bool is_hermitian(const Eigen::MatrixXcd& a, double tol = 1e-10);

/// Principal square root of a Hermitian PSD matrix via eigendecomposition.
/// Eigenvalues in [-1e-12*max, 0) are clamped to zero; anything more negative
/// is rejected with std::invalid_argument.
Eigen::MatrixXcd principal_sqrt(const Eigen::MatrixXcd& a);

/// Inverse principal square root, same admissibility rules; zero eigenvalues
/// are rejected since the inverse does not exist.
Eigen::MatrixXcd principal_inv_sqrt(const Eigen::MatrixXcd& a);

/// Solve (A) X = B by partial-pivot LU.  Emits one warning on stderr when the
/// reciprocal condition estimate drops below 1e-12 and throws when A is
/// numerically singular.
Eigen::MatrixXcd lu_solve(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                          const char* context);

}  // namespace hmimo

#endif
