#pragma once

#include <complex>
#include <string_view>

#include "msnoise/params.hpp"

namespace msnoise {

enum class DampingModel { viscous, structural };

std::string_view to_string(DampingModel model);

/// Complex displacement response of the fundamental mode, m/N:
///
///   H(f) = 1 / (-m (2 pi f)^2 + m (2 pi f_mem)^2 (1 + i f / (Q f_mem)))
///
/// The loss term is the same for both damping models; the model only changes
/// the thermal force spectrum. |H(f_mem)| / |H(0)| = Q.
std::complex<double> susceptibility(double f, const MembraneParams &mem);

/// |H(f)|
double susceptibility_magnitude(double f, const MembraneParams &mem);

/// Single-sided thermal force ASD, N/sqrt(Hz).
///   viscous:    sqrt(4 k_B T m w_mem / Q)
///   structural: sqrt(4 k_B T m w_mem^2 / (Q 2 pi f))
/// Throws std::domain_error for the structural model at f <= 0.
double thermal_force_asd(double f, const MembraneParams &mem, DampingModel model);

/// |H(f)| times the thermal force ASD, m/sqrt(Hz).
double thermal_displacement_asd(double f, const MembraneParams &mem, DampingModel model);

} // namespace msnoise
