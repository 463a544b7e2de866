#pragma once

#include "msnoise/params.hpp"

namespace msnoise {

/// Everything the closed-form quantum noise expressions depend on.
///
/// The signal-recycling gain and pole are only active when `sr_enabled()`;
/// otherwise g_SR is 1 and the one-pole factor is identically 1. The carrier
/// power is the beam-splitter power, so g_PR is already folded in.
class QuantumNoiseInputs {
public:
  QuantumNoiseInputs(OpticsParams optics, MembraneParams membrane, RecyclingGains gains,
                     bool sr_enabled);

  const OpticsParams &optics() const { return optics_; }
  const MembraneParams &membrane() const { return membrane_; }
  const RecyclingGains &gains() const { return gains_; }
  bool sr_enabled() const { return sr_enabled_; }

  /// g_SR when signal recycling is on, else 1.
  double signal_gain() const { return gains_.g_sr; }
  /// g_PR g_SR P0 = g_SR P_bs
  double effective_power() const { return gains_.g_sr * optics_.power_at_bs; }
  /// 1 + (f / f_SR)^2, or 1 without signal recycling.
  double pole_factor(double f) const;

private:
  OpticsParams optics_;
  MembraneParams membrane_;
  RecyclingGains gains_;
  bool sr_enabled_;
};

/// Output-port power for membrane displacement x (exact cosine form):
/// (r^2 P_bs / 2) [1 - cos(phi0 + 8 pi x / lambda)].
double output_power(double x, const QuantumNoiseInputs &in);

/// |dP_out/dx| at x = 0: (r^2 P_bs / 2)(8 pi / lambda)|sin phi0|. Zero on the
/// dark and bright fringes.
double signal_slope(const QuantumNoiseInputs &in);

/// Throws std::domain_error when shot_asd() has no finite value for `in`.
void check_shot_defined(const QuantumNoiseInputs &in);

/// Signal-normalized shot noise, m/sqrt(Hz):
///
///   sqrt(hbar c lambda / (16 pi g_PR g_SR r^2 P0)) sqrt(1 + (f/f_SR)^2) / |cos(phi0/2)|
///
/// The fringe-offset factor is the unrecycled result carried over unchanged
/// to the recycled case; it is only meaningful for small phi0 there.
double shot_asd(double f, const QuantumNoiseInputs &in);

/// Radiation-pressure force ASD below the signal-recycling pole, N/sqrt(Hz):
/// sqrt(16 pi hbar r^2 g_PR g_SR P0 / (c lambda)).
double rp_force_asd(const QuantumNoiseInputs &in);

/// |H(f)| rp_force_asd / sqrt(1 + (f/f_SR)^2), m/sqrt(Hz).
double rad_asd(double f, const QuantumNoiseInputs &in);

/// Standard quantum limit sqrt(2 hbar |H(f)|), the minimum over power of
/// sqrt(G_shot + G_rad).
double sql_asd(double f, const MembraneParams &mem);

} // namespace msnoise
