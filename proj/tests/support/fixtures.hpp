// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.
//
// Shared test fixtures: the reference front end and one-call front-end
// reductions for either side.

#ifndef HMIMO_TESTS_FIXTURES_HPP
#define HMIMO_TESTS_FIXTURES_HPP

#include "hmimo/matching.hpp"
#include "hmimo/scenario.hpp"

namespace hmimo::test {

inline scenario::RadioFrontEnd table_front_end() { return {}; }

inline matching::FrontEndReduction reduce(matching::MatchingKind kind,
                                          matching::Side side,
                                          const Eigen::MatrixXcd& z_a,
                                          std::complex<double> termination,
                                          const matching::LnaParams& lna) {
  if (kind == matching::MatchingKind::Full) {
    const matching::TwoPortBlocks net =
        side == matching::Side::Receive
            ? matching::synthesize_noise_matching(z_a, lna)
            : matching::synthesize_power_matching(z_a, termination);
    return matching::reduce_front_end({kind, side}, net, z_a, termination, lna);
  }
  return matching::reduce_front_end({kind, side}, {}, z_a, termination, lna);
}

}  // namespace hmimo::test

#endif
