// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "hmimo/em.hpp"

#include <cmath>
#include <stdexcept>

#include "hmimo/constants.hpp"
#include "hmimo/special_functions.hpp"

namespace hmimo::em {
namespace {

constexpr double eta = free_space_impedance;

double si(double x) { return sin_cos_integrals(x).si; }
double ci(double x) { return sin_cos_integrals(x).ci; }

// Side-by-side pair of half-wave dipoles at lateral distance d.
std::complex<double> side_by_side(double d, double l, double k) {
  const double u0 = k * d;
  const double root = std::sqrt(d * d + l * l);
  const double u1 = k * (root + l);
  const double u2 = k * (root - l);
  const double r = eta / (4.0 * pi) * (2.0 * ci(u0) - ci(u1) - ci(u2));
  const double x = -eta / (4.0 * pi) * (2.0 * si(u0) - si(u1) - si(u2));
  return {r, x};
}

// Collinear pair with center-to-center distance h > l.  The log term enters
// the resistance and reactance brackets with opposite signs; confirmed
// against the induced-EMF quadrature.
std::complex<double> collinear(double h, double l, double k) {
  const double v0 = k * h;
  const double v1 = 2.0 * k * h;
  const double v2 = 2.0 * k * (h + l);
  const double v3 = 2.0 * k * (h - l);
  const double vlog = std::log((h * h - l * l) / (h * h));
  const double cr = -2.0 * ci(v1) + ci(v2) + ci(v3) - vlog;
  const double cx = -2.0 * ci(v1) + ci(v2) + ci(v3) + vlog;
  const double sterm = 2.0 * si(v1) - si(v2) - si(v3);
  const double r =
      -eta / (8.0 * pi) * std::cos(v0) * cr + eta / (8.0 * pi) * std::sin(v0) * sterm;
  const double x =
      -eta / (8.0 * pi) * std::sin(v0) * cx - eta / (8.0 * pi) * std::cos(v0) * sterm;
  return {r, x};
}

// Parallel-in-echelon pair: lateral distance d, axial stagger h.
std::complex<double> echelon(double d, double h, double l, double k) {
  const auto w = [&](double dz) {
    const double root = std::sqrt(d * d + dz * dz);
    return std::pair<double, double>{k * (root + dz), k * (root - dz)};
  };
  const auto [w1, w1p] = w(h);
  const auto [w2, w2p] = w(h - l);
  const auto [w3, w3p] = w(h + l);
  const double w0 = k * h;
  const double c1 = -2.0 * ci(w1) - 2.0 * ci(w1p) + ci(w2) + ci(w2p) + ci(w3) + ci(w3p);
  const double s1 = 2.0 * si(w1) - 2.0 * si(w1p) - si(w2) + si(w2p) - si(w3) + si(w3p);
  const double c2 = 2.0 * ci(w1) - 2.0 * ci(w1p) - ci(w2) + ci(w2p) - ci(w3) + ci(w3p);
  const double s2 = 2.0 * si(w1) + 2.0 * si(w1p) - si(w2) - si(w2p) - si(w3) - si(w3p);
  const double r =
      -eta / (8.0 * pi) * std::cos(w0) * c1 + eta / (8.0 * pi) * std::sin(w0) * s1;
  const double x =
      -eta / (8.0 * pi) * std::cos(w0) * s2 + eta / (8.0 * pi) * std::sin(w0) * c2;
  return {r, x};
}

// g(theta) = cos(pi/2 sin t) / (pi cos t), the half-wave dipole pattern.
double pattern_gain(double theta) {
  return std::cos(0.5 * pi * std::sin(theta)) / (pi * std::cos(theta));
}

// Local theta_hat unit vector for elevation/azimuth angles.
Eigen::Vector3d theta_hat(double theta, double phi) {
  return {-std::sin(theta) * std::cos(phi), -std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

Eigen::MatrixXcd correlation_quadrature(
    const std::function<double(double, double)>& density,
    const ArrayGeometry& geom, double wavelength, int n, double* f_mass,
    const std::function<double(double, double)>* f_only) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  const double half = pi / 2.0;
  const int m = geom.count;
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(m, m);
  double mass = 0.0;
  for (int a = 0; a < n; ++a) {
    const double theta = half * x[a];
    for (int b = 0; b < n; ++b) {
      const double phi = half * x[b];
      const double ww = half * half * w[a] * w[b];
      const double val = density(theta, phi);
      if (f_only) mass += ww * (*f_only)(theta, phi);
      if (val == 0.0) continue;
      const Eigen::Vector3d kvec = wave_vector(theta, phi, wavelength);
      Eigen::VectorXcd phase(m);
      for (int p = 0; p < m; ++p) {
        phase(p) = std::exp(j1i * kvec.dot(geom.positions.col(p)));
      }
      sigma.noalias() += (ww * val) * (phase * phase.adjoint());
    }
  }
  if (f_mass) *f_mass = mass;
  return sigma;
}

}  // namespace

DipoleParams DipoleParams::half_wave(double wavelength, double radius_over_lambda,
                                     double dissipation_ratio) {
  if (wavelength <= 0.0) throw std::domain_error("half_wave: wavelength must be > 0");
  DipoleParams p;
  p.wavelength = wavelength;
  p.length = 0.5 * wavelength;
  p.radius = radius_over_lambda * wavelength;
  p.radiation_resistance = self_impedance(p).real();
  p.dissipation_resistance = dissipation_ratio * p.radiation_resistance;
  return p;
}

ArrayGeometry ArrayGeometry::uniform_linear(int count, double spacing,
                                            const Eigen::Vector3d& axis) {
  if (count < 1) throw std::domain_error("uniform_linear: count must be >= 1");
  if (spacing <= 0.0) throw std::domain_error("uniform_linear: spacing must be > 0");
  ArrayGeometry g;
  g.count = count;
  g.spacing = spacing;
  g.axis = axis.normalized();
  g.positions.resize(3, count);
  for (int m = 0; m < count; ++m) {
    g.positions.col(m) = (m - 0.5 * (count - 1)) * spacing * g.axis;
  }
  const double axial = std::abs(g.axis.z());
  if (axial < 1e-12) {
    g.configuration = DipoleConfig::SideBySide;
  } else if (axial > 1.0 - 1e-12) {
    g.configuration = DipoleConfig::Collinear;
  } else {
    g.configuration = DipoleConfig::ParallelInEchelon;
  }
  return g;
}

std::complex<double> self_impedance(const DipoleParams& params) {
  // Balanis closed form referred to the input current; for l = lambda/2 the
  // radius enters only through a term multiplied by sin(kl) = 0.
  const double l = params.length;
  const double k = 2.0 * pi / params.wavelength;
  const double kl = k * l;
  const double a = params.radius;
  constexpr double gamma = 0.57721566490153286061;
  const double r =
      eta / (2.0 * pi) *
      (gamma + std::log(kl) - ci(kl) +
       0.5 * std::sin(kl) * (si(2.0 * kl) - 2.0 * si(kl)) +
       0.5 * std::cos(kl) * (gamma + std::log(0.5 * kl) + ci(2.0 * kl) - 2.0 * ci(kl)));
  const double x =
      eta / (4.0 * pi) *
      (2.0 * si(kl) + std::cos(kl) * (2.0 * si(kl) - si(2.0 * kl)) -
       std::sin(kl) * (2.0 * ci(kl) - ci(2.0 * kl) - ci(2.0 * k * a * a / l)));
  return {r, x};
}

std::complex<double> mutual_impedance(DipoleConfig config, double separation,
                                      double offset, const DipoleParams& params) {
  const double l = params.length;
  const double k = 2.0 * pi / params.wavelength;
  switch (config) {
    case DipoleConfig::SideBySide:
      if (separation <= 0.0) {
        throw std::domain_error("mutual_impedance: side-by-side separation must be > 0");
      }
      return side_by_side(separation, l, k);
    case DipoleConfig::Collinear:
      if (separation <= l) {
        throw std::domain_error("mutual_impedance: collinear dipoles overlap");
      }
      return collinear(separation, l, k);
    case DipoleConfig::ParallelInEchelon:
      if (separation <= 0.0) {
        throw std::domain_error(
            "mutual_impedance: echelon lateral separation must be > 0");
      }
      return echelon(separation, std::abs(offset), l, k);
  }
  throw std::logic_error("mutual_impedance: unknown configuration");
}

Eigen::MatrixXcd coupling_matrix(const ArrayGeometry& geom, const DipoleParams& params,
                                 const std::vector<double>& dissipation_override) {
  const int m = geom.count;
  if (!dissipation_override.empty() &&
      static_cast<int>(dissipation_override.size()) != m) {
    throw std::invalid_argument("coupling_matrix: dissipation override size mismatch");
  }
  const std::complex<double> zs = self_impedance(params);
  Eigen::MatrixXcd z(m, m);
  for (int p = 0; p < m; ++p) {
    const double rd = dissipation_override.empty() ? params.dissipation_resistance
                                                   : dissipation_override[p];
    z(p, p) = zs + rd;
    for (int q = p + 1; q < m; ++q) {
      const Eigen::Vector3d delta = geom.positions.col(p) - geom.positions.col(q);
      const double axial = std::abs(delta.z());  // dipoles along z
      const double lateral = std::hypot(delta.x(), delta.y());
      std::complex<double> zm;
      if (lateral < 1e-12 * params.wavelength) {
        zm = mutual_impedance(DipoleConfig::Collinear, axial, 0.0, params);
      } else if (axial < 1e-12 * params.wavelength) {
        zm = mutual_impedance(DipoleConfig::SideBySide, lateral, 0.0, params);
      } else {
        zm = mutual_impedance(DipoleConfig::ParallelInEchelon, lateral, axial, params);
      }
      z(p, q) = zm;
      z(q, p) = zm;
    }
  }
  return z;
}

double mu_coefficient(double spacing, const DipoleParams& params) {
  const std::complex<double> zm =
      mutual_impedance(DipoleConfig::SideBySide, spacing, 0.0, params);
  return zm.real() / (params.radiation_resistance + params.dissipation_resistance);
}

Eigen::Vector3d wave_vector(double theta, double phi, double wavelength) {
  const double ct = std::cos(theta);
  return 2.0 * pi / wavelength *
         Eigen::Vector3d(ct * std::cos(phi), ct * std::sin(phi), std::sin(theta));
}

Eigen::VectorXcd steering_vector(double theta, double phi, const ArrayGeometry& geom,
                                 double wavelength) {
  const Eigen::Vector3d k = wave_vector(theta, phi, wavelength);
  Eigen::VectorXcd a(geom.count);
  for (int m = 0; m < geom.count; ++m) {
    a(m) = std::exp(j1i * k.dot(geom.positions.col(m)));
  }
  return a;
}

Eigen::Vector3cd effective_length(double theta, double phi, const DipoleParams& params) {
  if (std::abs(theta) >= pi / 2.0) {
    throw std::domain_error("effective_length: singular at |theta| = pi/2");
  }
  return params.wavelength * pattern_gain(theta) *
         theta_hat(theta, phi).cast<std::complex<double>>();
}

std::complex<double> los_alpha_prime(double theta_tx, double phi_tx, double theta_rx,
                                     double phi_rx, double distance,
                                     const DipoleParams& params) {
  if (distance <= 0.0) {
    throw std::domain_error("los_alpha_prime: distance must be > 0");
  }
  const Eigen::Vector3cd l_tx = effective_length(theta_tx, phi_tx, params);
  const Eigen::Vector3cd l_rx = effective_length(theta_rx, phi_rx, params);
  const std::complex<double> pol = l_tx(0) * l_rx(0) + l_tx(1) * l_rx(1) + l_tx(2) * l_rx(2);
  const double psi0 = -2.0 * pi * distance / params.wavelength;
  return j1i * std::exp(j1i * psi0) * pol / (2.0 * params.wavelength * distance);
}

Eigen::VectorXcd z_art_los(const std::vector<PlanePath>& paths, const ArrayGeometry& geom,
                           const DipoleParams& params, const DipoleParams& tx_params) {
  if (paths.empty()) throw std::domain_error("z_art_los: path list is empty");
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(geom.count);
  for (const PlanePath& path : paths) {
    // Mirror the receive angles to get the departure direction at the far
    // end of the path; with vertical dipoles only the elevation matters.
    const double theta_tx = -path.elevation;
    const double phi_tx = path.azimuth + pi;
    const Eigen::Vector3cd l_tx = effective_length(theta_tx, phi_tx, tx_params);
    const Eigen::Vector3cd l_rx = effective_length(path.elevation, path.azimuth, params);
    const std::complex<double> pol =
        l_tx(0) * l_rx(0) + l_tx(1) * l_rx(1) + l_tx(2) * l_rx(2);
    const double psi0 = -2.0 * pi * path.distance / params.wavelength;
    const std::complex<double> alpha_prime =
        j1i * std::exp(j1i * psi0) * pol / (2.0 * params.wavelength * path.distance);
    z.noalias() += path.gain * free_space_impedance * alpha_prime *
                   steering_vector(path.elevation, path.azimuth, geom, params.wavelength);
  }
  return z;
}

Eigen::MatrixXcd spatial_correlation(const std::function<double(double, double)>& beta,
                                     const std::function<double(double, double)>& f,
                                     const ArrayGeometry& geom, double wavelength) {
  const auto density = [&](double t, double p) { return beta(t, p) * f(t, p); };
  double mass = 0.0;
  int n = 32;
  Eigen::MatrixXcd sigma = correlation_quadrature(density, geom, wavelength, n, &mass, &f);
  for (n = 64; n <= 512; n *= 2) {
    double mass_next = 0.0;
    Eigen::MatrixXcd next =
        correlation_quadrature(density, geom, wavelength, n, &mass_next, &f);
    const double delta = (next - sigma).norm();
    sigma.swap(next);
    mass = mass_next;
    if (delta < 1e-8 * std::max(1.0, sigma.norm())) break;
  }
  if (std::abs(mass - 1.0) > 1e-6) {
    throw std::invalid_argument(
        "spatial_correlation: scattering function does not integrate to 1");
  }
  return sigma;
}

}  // namespace hmimo::em
