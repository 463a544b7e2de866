#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "msnoise/constants.hpp"
#include "msnoise/error.hpp"

namespace msnoise {

/// Fundamental mode of the translucent membrane. Lossless: r^2 + t^2 = 1.
struct MembraneParams {
  double reflectance = 0.0; ///< power reflectance r^2
  double f_mem = 0.0;       ///< resonance, Hz
  double mass = 0.0;        ///< effective modal mass, kg
  double q = 0.0;           ///< mechanical quality factor
  double temperature = 0.0; ///< K

  double amplitude_reflectance() const { return std::sqrt(reflectance); }
  double amplitude_transmittance() const { return std::sqrt(1.0 - reflectance); }
  double omega_mem() const { return constants::two_pi * f_mem; }

  bool operator==(const MembraneParams &) const = default;
};

struct OpticsParams {
  double wavelength = 0.0;  ///< m
  double power_at_bs = 0.0; ///< carrier power at the beam splitter (g_PR P0), W
  double phi0 = 0.0;        ///< fringe offset, rad, in [-pi, pi)

  double omega0() const { return constants::two_pi * constants::c_light / wavelength; }

  bool operator==(const OpticsParams &) const = default;
};

/// Recycling mirrors and geometry. An absent mirror means no recycling cavity.
struct RecyclingParams {
  std::optional<double> r_sr; ///< amplitude reflectance of the signal-recycling mirror
  std::optional<double> r_pr; ///< amplitude reflectance of the power-recycling mirror
  double arm_length = 0.0;    ///< L, m
  double sr_distance = 0.0;   ///< L_SR, beam splitter to SR mirror, m

  bool operator==(const RecyclingParams &) const = default;
};

/// Gains and signal-recycling cavity pole derived from RecyclingParams.
/// f_sr is +inf when there is no signal-recycling mirror.
struct RecyclingGains {
  double g_pr = 1.0;
  double g_sr = 1.0;
  double f_sr = INFINITY;
};

std::vector<Violation> validate(const MembraneParams &mem);
std::vector<Violation> validate(const OpticsParams &optics);
std::vector<Violation> validate(const RecyclingParams &rp);

/// g = (1 + r) / (1 - r) for each mirror present, f_SR = c (1 - r_SR) / (4 pi (L_SR + L)).
/// Throws ValidationError when `rp` is invalid.
RecyclingGains derive_recycling(const RecyclingParams &rp);

/// Power incident on the power-recycling mirror, P0 = P_bs / g_PR.
double input_power(const OpticsParams &optics, const RecyclingGains &gains);

} // namespace msnoise
