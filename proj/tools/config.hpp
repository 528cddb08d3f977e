// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#ifndef HMIMO_TOOLS_CONFIG_HPP
#define HMIMO_TOOLS_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmimo/scenario.hpp"

namespace hmimo::cli {

/// Raised on malformed input; the message names the offending key.  Mapped
/// to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fully resolved run configuration: the scenario engine inputs plus the
/// CLI-only sweep parameters.  Every field except the matching kinds has a
/// default reproducing the reference setup, so an empty file runs it.
struct RunConfig {
  scenario::ScenarioConfig scenario;
  std::vector<double> aperture_lambdas = {6.0};  // sweep-aperture only
  bool matching_rx_given = false;

  // two-element command
  double phi2_deg = 24.0;
  double phi_step_deg = 1.0;
  double ue_distance_m = 50.0;
  std::vector<double> two_element_spacings = {0.1, 0.25, 0.5};

  // eigen-spectrum command
  std::string spectrum_kind = "zar";  // zar | u
};

/// Parse a strict INI file: [array], [frontend], [matching], [scenario],
/// [sweep] sections, '#'/';' full-line comments, unknown keys are errors.
/// `text` is the file content.
RunConfig parse_config(const std::string& text);

/// Canonical "section.key=value" lines (sorted, resolved values) for the
/// manifest; reparsing it reproduces the same RunConfig.
std::string canonical_config(const RunConfig& config);

/// FNV-1a digest of the canonical form, stable under key reordering in the
/// source file.
std::string config_digest(const std::string& canonical);

std::string matching_kind_name(matching::MatchingKind kind);
std::string processing_name(link::Processing processing);

}  // namespace hmimo::cli

#endif
