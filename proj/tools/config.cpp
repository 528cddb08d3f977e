// SPDX-License-Identifier: Apache-2.0
//
// hmimo -- multiport circuit-theory simulator for dense dipole arrays.

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hmimo/constants.hpp"

namespace hmimo::cli {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config error: key " + key + ": expected a number, got '" +
                      value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config error: key " + key + ": expected an integer, got '" +
                      value + "'");
  }
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw ConfigError("config error: key " + key + ": empty list element");
    }
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw ConfigError("config error: key " + key + ": empty list");
  return out;
}

std::complex<double> parse_complex(const std::string& key, const std::string& value) {
  const auto list = parse_list(key, value);
  if (list.size() == 1) return {list[0], 0.0};
  if (list.size() == 2) return {list[0], list[1]};
  throw ConfigError("config error: key " + key + ": expected 're,im'");
}

matching::MatchingKind parse_matching(const std::string& key, const std::string& value) {
  if (value == "full") return matching::MatchingKind::Full;
  if (value == "self") return matching::MatchingKind::SelfImpedance;
  if (value == "none") return matching::MatchingKind::None;
  throw ConfigError("config error: key " + key +
                    ": expected full|self|none, got '" + value + "'");
}

double deg2rad(double deg) { return deg * pi / 180.0; }

}  // namespace

std::string matching_kind_name(matching::MatchingKind kind) {
  switch (kind) {
    case matching::MatchingKind::Full: return "full";
    case matching::MatchingKind::SelfImpedance: return "self";
    case matching::MatchingKind::None: return "none";
  }
  return "?";
}

std::string processing_name(link::Processing processing) {
  return processing == link::Processing::MaxRatio ? "mr" : "mmse";
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::map<std::string, std::string> kv;

  std::stringstream ss(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config error: line " + std::to_string(lineno) +
                          ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      static const char* known[] = {"array", "frontend", "matching", "scenario",
                                    "sweep"};
      if (std::find(std::begin(known), std::end(known), section) == std::end(known)) {
        throw ConfigError("config error: unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config error: line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    if (section.empty()) {
      throw ConfigError("config error: line " + std::to_string(lineno) +
                        ": key outside any section");
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    if (kv.count(key)) {
      throw ConfigError("config error: duplicate key " + key);
    }
    kv[key] = trim(line.substr(eq + 1));
  }

  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  scenario::ScenarioConfig& sc = cfg.scenario;
  scenario::RadioFrontEnd& fe = sc.frontend;

  if (auto v = take("array.m"); !v.empty()) {
    sc.num_antennas = static_cast<int>(parse_int("array.m", v));
    if (sc.num_antennas < 1) throw ConfigError("config error: key array.m: must be >= 1");
  }
  if (auto v = take("array.aperture_lambdas"); !v.empty()) {
    cfg.aperture_lambdas = parse_list("array.aperture_lambdas", v);
    for (double a : cfg.aperture_lambdas) {
      if (a <= 0.0)
        throw ConfigError("config error: key array.aperture_lambdas: must be > 0");
    }
  }
  if (auto v = take("array.spacing_lambdas"); !v.empty()) {
    sc.spacing_lambdas = parse_list("array.spacing_lambdas", v);
    for (double s : sc.spacing_lambdas) {
      if (s <= 0.0)
        throw ConfigError("config error: key array.spacing_lambdas: must be > 0");
    }
  }

  if (auto v = take("frontend.carrier_ghz"); !v.empty()) {
    fe.carrier_hz = 1e9 * parse_double("frontend.carrier_ghz", v);
  }
  if (auto v = take("frontend.bandwidth_mhz"); !v.empty()) {
    fe.bandwidth_hz = 1e6 * parse_double("frontend.bandwidth_mhz", v);
  }
  if (auto v = take("frontend.tx_power_dbw"); !v.empty()) {
    fe.tx_power_w = std::pow(10.0, parse_double("frontend.tx_power_dbw", v) / 10.0);
  }
  if (auto v = take("frontend.z_gen"); !v.empty()) {
    fe.z_gen = parse_complex("frontend.z_gen", v);
  }
  if (auto v = take("frontend.z_load"); !v.empty()) {
    fe.z_load = parse_complex("frontend.z_load", v);
  }
  if (auto v = take("frontend.antenna_temp_k"); !v.empty()) {
    fe.antenna_temp_k = parse_double("frontend.antenna_temp_k", v);
  }
  if (auto v = take("frontend.lna_noise_resistance"); !v.empty()) {
    fe.lna_noise_resistance = parse_double("frontend.lna_noise_resistance", v);
  }
  if (auto v = take("frontend.lna_rho"); !v.empty()) {
    fe.lna_rho = parse_complex("frontend.lna_rho", v);
    if (std::abs(fe.lna_rho) > 1.0) {
      throw ConfigError("config error: key frontend.lna_rho: |rho| must be <= 1");
    }
  }
  if (auto v = take("frontend.dissipation_ratio"); !v.empty()) {
    fe.dissipation_ratio = parse_double("frontend.dissipation_ratio", v);
  }
  if (auto v = take("frontend.dipole_radius_over_lambda"); !v.empty()) {
    fe.dipole_radius_over_lambda =
        parse_double("frontend.dipole_radius_over_lambda", v);
  }

  if (auto v = take("matching.rx"); !v.empty()) {
    sc.matching_kinds.clear();
    std::stringstream ms(v);
    std::string item;
    while (std::getline(ms, item, ',')) {
      sc.matching_kinds.push_back(parse_matching("matching.rx", trim(item)));
    }
    cfg.matching_rx_given = true;
  }
  if (auto v = take("matching.tx"); !v.empty()) {
    sc.matching_tx_override = parse_matching("matching.tx", v);
  }

  if (auto v = take("scenario.ues"); !v.empty()) {
    sc.num_ues = static_cast<int>(parse_int("scenario.ues", v));
    if (sc.num_ues < 1) throw ConfigError("config error: key scenario.ues: must be >= 1");
  }
  if (auto v = take("scenario.drops"); !v.empty()) {
    sc.drops = static_cast<int>(parse_int("scenario.drops", v));
    if (sc.drops < 1) throw ConfigError("config error: key scenario.drops: must be >= 1");
  }
  if (auto v = take("scenario.seed"); !v.empty()) {
    sc.seed = static_cast<std::uint64_t>(parse_int("scenario.seed", v));
  }
  if (auto v = take("scenario.azimuth_deg"); !v.empty()) {
    const auto range = parse_list("scenario.azimuth_deg", v);
    if (range.size() != 2 || range[0] >= range[1]) {
      throw ConfigError("config error: key scenario.azimuth_deg: expected 'lo,hi'");
    }
    sc.azimuth_min_rad = deg2rad(range[0]);
    sc.azimuth_max_rad = deg2rad(range[1]);
  }
  if (auto v = take("scenario.distance_m"); !v.empty()) {
    const auto range = parse_list("scenario.distance_m", v);
    if (range.size() != 2 || range[0] <= 0.0 || range[0] > range[1]) {
      throw ConfigError("config error: key scenario.distance_m: expected '0<lo,hi'");
    }
    sc.distance_min_m = range[0];
    sc.distance_max_m = range[1];
  }
  if (auto v = take("scenario.bs_height_m"); !v.empty()) {
    sc.bs_height_m = parse_double("scenario.bs_height_m", v);
    if (sc.bs_height_m <= 0.0) {
      throw ConfigError("config error: key scenario.bs_height_m: must be > 0");
    }
  }
  if (auto v = take("scenario.distance_density"); !v.empty()) {
    if (v == "uniform") {
      sc.uniform_in_area = false;
    } else if (v == "area") {
      sc.uniform_in_area = true;
    } else {
      throw ConfigError(
          "config error: key scenario.distance_density: expected uniform|area");
    }
  }
  if (auto v = take("scenario.combiner"); !v.empty()) {
    if (v == "mr") {
      sc.processing = link::Processing::MaxRatio;
    } else if (v == "mmse") {
      sc.processing = link::Processing::Mmse;
    } else {
      throw ConfigError("config error: key scenario.combiner: expected mr|mmse");
    }
  }

  if (auto v = take("sweep.phi2_deg"); !v.empty()) {
    cfg.phi2_deg = parse_double("sweep.phi2_deg", v);
  }
  if (auto v = take("sweep.phi_step_deg"); !v.empty()) {
    cfg.phi_step_deg = parse_double("sweep.phi_step_deg", v);
    if (cfg.phi_step_deg <= 0.0) {
      throw ConfigError("config error: key sweep.phi_step_deg: must be > 0");
    }
  }
  if (auto v = take("sweep.ue_distance_m"); !v.empty()) {
    cfg.ue_distance_m = parse_double("sweep.ue_distance_m", v);
    if (cfg.ue_distance_m <= 0.0) {
      throw ConfigError("config error: key sweep.ue_distance_m: must be > 0");
    }
  }
  if (auto v = take("sweep.two_element_spacing_lambdas"); !v.empty()) {
    cfg.two_element_spacings = parse_list("sweep.two_element_spacing_lambdas", v);
  }
  if (auto v = take("sweep.spectrum"); !v.empty()) {
    if (v != "zar" && v != "u") {
      throw ConfigError("config error: key sweep.spectrum: expected zar|u");
    }
    cfg.spectrum_kind = v;
  }

  if (!kv.empty()) {
    throw ConfigError("config error: unknown key " + kv.begin()->first);
  }
  return cfg;
}

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt(v[i]);
  }
  return out;
}

}  // namespace

std::string canonical_config(const RunConfig& cfg) {
  const scenario::ScenarioConfig& sc = cfg.scenario;
  const scenario::RadioFrontEnd& fe = sc.frontend;
  std::map<std::string, std::string> kv;
  kv["array.m"] = std::to_string(sc.num_antennas);
  kv["array.aperture_lambdas"] = fmt_list(cfg.aperture_lambdas);
  kv["array.spacing_lambdas"] = fmt_list(sc.spacing_lambdas);
  kv["frontend.carrier_ghz"] = fmt(fe.carrier_hz / 1e9);
  kv["frontend.bandwidth_mhz"] = fmt(fe.bandwidth_hz / 1e6);
  kv["frontend.tx_power_dbw"] = fmt(10.0 * std::log10(fe.tx_power_w));
  kv["frontend.z_gen"] = fmt(fe.z_gen.real()) + "," + fmt(fe.z_gen.imag());
  kv["frontend.z_load"] = fmt(fe.z_load.real()) + "," + fmt(fe.z_load.imag());
  kv["frontend.antenna_temp_k"] = fmt(fe.antenna_temp_k);
  kv["frontend.lna_noise_resistance"] = fmt(fe.lna_noise_resistance);
  kv["frontend.lna_rho"] = fmt(fe.lna_rho.real()) + "," + fmt(fe.lna_rho.imag());
  kv["frontend.dissipation_ratio"] = fmt(fe.dissipation_ratio);
  kv["frontend.dipole_radius_over_lambda"] = fmt(fe.dipole_radius_over_lambda);
  if (cfg.matching_rx_given || !sc.matching_kinds.empty()) {
    std::string kinds;
    for (std::size_t i = 0; i < sc.matching_kinds.size(); ++i) {
      if (i) kinds += ",";
      kinds += matching_kind_name(sc.matching_kinds[i]);
    }
    kv["matching.rx"] = kinds;
  }
  if (sc.matching_tx_override) {
    kv["matching.tx"] = matching_kind_name(*sc.matching_tx_override);
  }
  kv["scenario.ues"] = std::to_string(sc.num_ues);
  kv["scenario.drops"] = std::to_string(sc.drops);
  kv["scenario.seed"] = std::to_string(sc.seed);
  kv["scenario.azimuth_deg"] =
      fmt(sc.azimuth_min_rad * 180.0 / pi) + "," + fmt(sc.azimuth_max_rad * 180.0 / pi);
  kv["scenario.distance_m"] = fmt(sc.distance_min_m) + "," + fmt(sc.distance_max_m);
  kv["scenario.bs_height_m"] = fmt(sc.bs_height_m);
  kv["scenario.distance_density"] = sc.uniform_in_area ? "area" : "uniform";
  kv["scenario.combiner"] = processing_name(sc.processing);
  kv["sweep.phi2_deg"] = fmt(cfg.phi2_deg);
  kv["sweep.phi_step_deg"] = fmt(cfg.phi_step_deg);
  kv["sweep.ue_distance_m"] = fmt(cfg.ue_distance_m);
  kv["sweep.two_element_spacing_lambdas"] = fmt_list(cfg.two_element_spacings);
  kv["sweep.spectrum"] = cfg.spectrum_kind;

  std::string out;
  for (const auto& [key, value] : kv) {
    const auto dot = key.find('.');
    out += "[" + key.substr(0, dot) + "]\n" + key.substr(dot + 1) + " = " + value +
           "\n";
  }
  return out;
}

std::string config_digest(const std::string& canonical) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash);
  return buf;
}

}  // namespace hmimo::cli
