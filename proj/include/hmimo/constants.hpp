// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_CONSTANTS_HPP
#define HMIMO_CONSTANTS_HPP

#include <complex>
#include <numbers>

namespace hmimo {

inline constexpr double pi = std::numbers::pi;

/// Boltzmann constant [J/K].
inline constexpr double boltzmann = 1.380649e-23;

/// Speed of light in vacuum [m/s].
inline constexpr double speed_of_light = 299792458.0;

/// Free-space wave impedance [ohm], 120*pi in the convention used by the
/// dipole impedance closed forms.
inline constexpr double free_space_impedance = 120.0 * pi;

inline constexpr std::complex<double> j1i{0.0, 1.0};

}  // namespace hmimo

#endif
