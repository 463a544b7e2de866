#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "msnoise/params.hpp"
#include "msnoise/spectrum.hpp"

namespace msnoise {

/// Complete description of one interferometer setup plus its frequency grid.
struct InterferometerConfig {
  OpticsParams optics;
  MembraneParams membrane;
  RecyclingParams recycling;
  FrequencyGrid grid;

  bool operator==(const InterferometerConfig &) const = default;
};

/// Every violation across optics, membrane, recycling and grid.
std::vector<Violation> validate(const InterferometerConfig &cfg);

/// Recognised config keys, in file order.
std::span<const std::string_view> config_keys();

/// Parses `key = value` lines. `#` starts a comment. Unknown, duplicate and
/// malformed entries are collected and thrown together as a ValidationError,
/// as are missing required keys and invariant violations.
///
/// Required: lambda, power_at_bs, membrane.{R,f_mem,m_eff,Q,T}, geometry.L.
/// Optional: phi0 (0), recycling.r_SR / recycling.r_PR (absent = no mirror),
/// geometry.L_SR (0), grid.* (1 kHz to 1 MHz, 1000 log points).
InterferometerConfig parse_config(std::string_view text);
InterferometerConfig load_config(const std::string &path);

/// Sets one key from its textual value. Throws ValidationError for an
/// unknown key or a malformed value. Does not check invariants.
void set_config_value(InterferometerConfig &cfg, std::string_view key, std::string_view value);

/// Sets one numeric key. Throws ValidationError for an unknown or
/// non-numeric key, or a non-integral grid.n_points.
void set_config_number(InterferometerConfig &cfg, std::string_view key, double value);

/// Reads one key back as a double. Throws ValidationError for an unknown key,
/// or a non-numeric one (grid.spacing).
std::optional<double> get_config_number(const InterferometerConfig &cfg, std::string_view key);

/// Serialises `cfg` in the same format parse_config() reads. Doubles are
/// written in shortest round-trip form, so parse_config(format_config(c)) == c.
std::string format_config(const InterferometerConfig &cfg);

/// Bundled design example: 1064 nm, L = 0.6 m, L_SR = 3 cm, r_SR = 0.998,
/// 1 W at the beam splitter, r^2 = 0.35, 75 kHz, 125 ng, Q = 1e7, 1 K.
InterferometerConfig table1_preset();

} // namespace msnoise
