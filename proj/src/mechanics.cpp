#include "msnoise/mechanics.hpp"

#include <cmath>
#include <stdexcept>

namespace msnoise {

using constants::k_boltzmann;
using constants::two_pi;

std::string_view to_string(DampingModel model) {
  return model == DampingModel::viscous ? "viscous" : "structural";
}

std::complex<double> susceptibility(double f, const MembraneParams &mem) {
  const double w = two_pi * f;
  const double wm = mem.omega_mem();
  const std::complex<double> denom{-mem.mass * w * w + mem.mass * wm * wm,
                                   mem.mass * wm * wm * f / (mem.q * mem.f_mem)};
  return 1.0 / denom;
}

double susceptibility_magnitude(double f, const MembraneParams &mem) {
  return std::abs(susceptibility(f, mem));
}

double thermal_force_asd(double f, const MembraneParams &mem, DampingModel model) {
  const double wm = mem.omega_mem();
  const double scale = 4.0 * k_boltzmann * mem.temperature * mem.mass / mem.q;
  switch (model) {
  case DampingModel::viscous:
    return std::sqrt(scale * wm);
  case DampingModel::structural:
    if (!(f > 0.0))
      throw std::domain_error("structural thermal noise diverges at f = 0");
    return std::sqrt(scale * wm * wm / (two_pi * f));
  }
  throw std::logic_error("unknown damping model");
}

double thermal_displacement_asd(double f, const MembraneParams &mem, DampingModel model) {
  return susceptibility_magnitude(f, mem) * thermal_force_asd(f, mem, model);
}

} // namespace msnoise
