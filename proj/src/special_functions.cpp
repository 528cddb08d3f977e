// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "hmimo/constants.hpp"

namespace hmimo {
namespace {

constexpr double euler_gamma = 0.57721566490153286061;

// Crossover between the power series and the continued fraction.  At x = 9
// the largest series term is ~1e2, so the alternating-series cancellation
// costs at most ~1e-14 absolute, and the continued fraction for E1(ix)
// converges in well under 200 iterations.
constexpr double series_cutoff = 9.0;

// Si(x) and Cin(x) = gamma + ln x - Ci(x) by their Maclaurin series.
SiCi by_series(double x) {
  const double x2 = x * x;
  // Si(x) = sum_{n>=0} (-1)^n x^{2n+1} / ((2n+1)(2n+1)!)
  double si = x;
  double term = x;
  for (int n = 1; n < 60; ++n) {
    const int m = 2 * n + 1;
    term *= -x2 / (2.0 * n * m);
    si += term / m;
    if (std::abs(term) < 1e-18 * std::abs(si) + 1e-300) break;
  }
  // Cin(x) = sum_{n>=1} (-1)^{n+1} x^{2n} / (2n (2n)!)
  double cin = 0.0;
  term = 1.0;
  for (int n = 1; n < 60; ++n) {
    const int m = 2 * n;
    term *= -x2 / (m * (m - 1));
    cin -= term / m;
    if (std::abs(term) < 1e-18 * std::abs(cin) + 1e-300) break;
  }
  return {si, euler_gamma + std::log(x) - cin};
}

// E1(ix) by the continued fraction
//   E1(z) = e^{-z} / (z + 1/(1 + 1/(z + 2/(1 + 2/(z + ...)))))
// evaluated with the modified Lentz algorithm.  On the imaginary axis the
// fraction still converges for |z| above a few units.
std::complex<double> e1_of_ix(double x) {
  const std::complex<double> z(0.0, x);
  const double tiny = 1e-290;
  std::complex<double> f = z + 1.0;
  if (std::abs(f) == 0.0) f = tiny;
  std::complex<double> c = f;
  std::complex<double> d = 0.0;
  for (int n = 1; n < 10000; ++n) {
    const double an = static_cast<double>(n) * n;
    const std::complex<double> b = z + (2.0 * n + 1.0);
    d = b - an * d;
    if (std::abs(d) == 0.0) d = tiny;
    c = b - an / c;
    if (std::abs(c) == 0.0) c = tiny;
    d = 1.0 / d;
    const std::complex<double> delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  // f now holds z + 1 - 1/(z+3- 4/(z+5-...)) in its even contraction form;
  // E1(z) = e^{-z}/f.
  return std::exp(-z) / f;
}

}  // namespace

SiCi sin_cos_integrals(double x) {
  if (x < 0.0) throw std::domain_error("sin_cos_integrals: requires x >= 0");
  if (x == 0.0) {
    return {0.0, -std::numeric_limits<double>::infinity()};
  }
  if (x < series_cutoff) return by_series(x);
  // E1(ix) = -Ci(x) - i (pi/2 - Si(x)) for x > 0.
  const std::complex<double> e1 = e1_of_ix(x);
  return {pi / 2.0 + e1.imag(), -e1.real()};
}

double sine_integral(double x) { return sin_cos_integrals(x).si; }

double cosine_integral(double x) {
  if (x <= 0.0) throw std::domain_error("cosine_integral: requires x > 0");
  return sin_cos_integrals(x).ci;
}

}  // namespace hmimo
