#include "msnoise/quantum.hpp"

#include <cmath>
#include <stdexcept>

#include "msnoise/mechanics.hpp"

namespace msnoise {

using constants::c_light;
using constants::hbar;
using constants::pi;

QuantumNoiseInputs::QuantumNoiseInputs(OpticsParams optics, MembraneParams membrane,
                                       RecyclingGains gains, bool sr_enabled)
    : optics_(optics), membrane_(membrane), gains_(gains), sr_enabled_(sr_enabled) {
  if (!sr_enabled_) {
    gains_.g_sr = 1.0;
    gains_.f_sr = INFINITY;
  }
}

double QuantumNoiseInputs::pole_factor(double f) const {
  if (!sr_enabled_ || std::isinf(gains_.f_sr))
    return 1.0;
  const double x = f / gains_.f_sr;
  return 1.0 + x * x;
}

double output_power(double x, const QuantumNoiseInputs &in) {
  const auto &o = in.optics();
  const double phase = o.phi0 + 8.0 * pi / o.wavelength * x;
  return 0.5 * in.membrane().reflectance * o.power_at_bs * (1.0 - std::cos(phase));
}

double signal_slope(const QuantumNoiseInputs &in) {
  const auto &o = in.optics();
  return 0.5 * in.membrane().reflectance * o.power_at_bs * (8.0 * pi / o.wavelength) *
         std::abs(std::sin(o.phi0));
}

void check_shot_defined(const QuantumNoiseInputs &in) {
  if (!(in.membrane().reflectance > 0.0) || !(in.effective_power() > 0.0))
    throw std::domain_error("no signal: shot noise unbounded");
  if (std::cos(0.5 * in.optics().phi0) == 0.0 || std::abs(in.optics().phi0) >= pi)
    throw std::domain_error("zero fringe slope");
}

double shot_asd(double f, const QuantumNoiseInputs &in) {
  check_shot_defined(in);
  const auto &o = in.optics();
  const double base = std::sqrt(hbar * c_light * o.wavelength /
                                (16.0 * pi * in.membrane().reflectance * in.effective_power()));
  return base * std::sqrt(in.pole_factor(f)) / std::abs(std::cos(0.5 * o.phi0));
}

double rp_force_asd(const QuantumNoiseInputs &in) {
  return std::sqrt(16.0 * pi * hbar * in.membrane().reflectance * in.effective_power() /
                   (c_light * in.optics().wavelength));
}

double rad_asd(double f, const QuantumNoiseInputs &in) {
  return susceptibility_magnitude(f, in.membrane()) * rp_force_asd(in) /
         std::sqrt(in.pole_factor(f));
}

double sql_asd(double f, const MembraneParams &mem) {
  return std::sqrt(2.0 * hbar * susceptibility_magnitude(f, mem));
}

} // namespace msnoise
