#include "msnoise/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "msnoise/mechanics.hpp"

namespace msnoise::oracle {

using constants::c_light;
using constants::hbar;

namespace {

using Gram = std::array<std::array<double, mode_count>, mode_count>;

// Time average of E(t)^2 as a quadratic form in X = (1, E_v1, E_v2):
// <E^2> = norm^2 / 2 * X^T (a a^T + b b^T) X.
Gram mean_square(const QuadratureField &e) {
  Gram g{};
  const double w = 0.5 * e.norm * e.norm;
  for (std::size_t i = 0; i < mode_count; ++i)
    for (std::size_t j = 0; j < mode_count; ++j)
      g[i][j] = w * (e.cos_coeffs[i] * e.cos_coeffs[j] + e.sin_coeffs[i] * e.sin_coeffs[j]);
  return g;
}

void accumulate(Gram &acc, const Gram &g, double sign) {
  for (std::size_t i = 0; i < mode_count; ++i)
    for (std::size_t j = 0; j < mode_count; ++j)
      acc[i][j] += sign * g[i][j];
}

// Phase advance by pi/2: a cos + b sin -> b cos - a sin.
QuadratureField rotate(const QuadratureField &e) {
  QuadratureField out;
  out.norm = e.norm;
  for (std::size_t k = 0; k < mode_count; ++k) {
    out.cos_coeffs[k] = e.sin_coeffs[k];
    out.sin_coeffs[k] = -e.cos_coeffs[k];
  }
  return out;
}

QuadratureField combine(double ta, const QuadratureField &a, double tb, const QuadratureField &b) {
  QuadratureField out;
  out.norm = a.norm;
  for (std::size_t k = 0; k < mode_count; ++k) {
    out.cos_coeffs[k] = ta * a.cos_coeffs[k] + tb * b.cos_coeffs[k];
    out.sin_coeffs[k] = ta * a.sin_coeffs[k] + tb * b.sin_coeffs[k];
  }
  return out;
}

double rel_error(double value, double reference) {
  if (value == reference)
    return 0.0;
  const double scale = std::max(std::abs(value), std::abs(reference));
  return std::abs(value - reference) / scale;
}

OpticsParams nd_yag(double power) { return {.wavelength = 1064e-9, .power_at_bs = power, .phi0 = 0.0}; }

double closed_form_force_psd(double power, double reflectance, const OpticsParams &optics) {
  MembraneParams mem{.reflectance = reflectance, .f_mem = 1.0, .mass = 1.0, .q = 1.0,
                     .temperature = 0.0};
  OpticsParams o = optics;
  o.power_at_bs = power;
  const double asd = rp_force_asd(QuantumNoiseInputs(o, mem, RecyclingGains{}, false));
  return asd * asd;
}

} // namespace

double QuadratureField::coefficient_energy() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < mode_count; ++k)
    sum += cos_coeffs[k] * cos_coeffs[k] + sin_coeffs[k] * sin_coeffs[k];
  return sum;
}

IncidentFields incident_fields(double power, const OpticsParams &optics, VacuumPort port) {
  const double w0 = optics.omega0();
  const double carrier_amp = std::sqrt(power / (hbar * w0));
  const double norm = std::sqrt(hbar * w0 / c_light); // A = eps0 = 1
  const double v = 1.0 / std::sqrt(2.0);
  const double sign_b = port == VacuumPort::output ? -1.0 : 1.0;

  IncidentFields f;
  f.a.norm = f.b.norm = norm;
  f.a.cos_coeffs = {carrier_amp, v, 0.0};
  f.a.sin_coeffs = {0.0, 0.0, v};
  f.b.cos_coeffs = {carrier_amp, sign_b * v, 0.0};
  f.b.sin_coeffs = {0.0, 0.0, sign_b * v};
  return f;
}

OutgoingFields membrane_scatter(const IncidentFields &in, double r, double t) {
  if (std::abs(r * r + t * t - 1.0) > 1e-12)
    throw std::invalid_argument("membrane_scatter: lossy membrane (r^2 + t^2 != 1)");
  return {.c = combine(t, in.b, r, rotate(in.a)), .d = combine(t, in.a, r, rotate(in.b))};
}

ForceCoefficients rp_force_coefficients(const IncidentFields &in, const OutgoingFields &out) {
  // F = c * A * eps0 / c * [(<C^2> - <D^2>) - (<B^2> - <A^2>)], A = eps0 = 1.
  Gram flux{};
  accumulate(flux, mean_square(out.c), +1.0);
  accumulate(flux, mean_square(out.d), -1.0);
  accumulate(flux, mean_square(in.b), -1.0);
  accumulate(flux, mean_square(in.a), +1.0);

  // X^T M X with X_0 = 1: linear coefficient of X_k is M_0k + M_k0.
  return {.dc = flux[carrier][carrier],
          .vacuum1 = flux[carrier][vacuum1] + flux[vacuum1][carrier],
          .vacuum2 = flux[carrier][vacuum2] + flux[vacuum2][carrier]};
}

double force_psd_from_coefficients(const ForceCoefficients &coeffs) {
  return coeffs.vacuum1 * coeffs.vacuum1 + coeffs.vacuum2 * coeffs.vacuum2;
}

double force_psd(double power, double reflectance, const OpticsParams &optics) {
  const auto in = incident_fields(power, optics);
  const auto out =
      membrane_scatter(in, std::sqrt(reflectance), std::sqrt(1.0 - reflectance));
  return force_psd_from_coefficients(rp_force_coefficients(in, out));
}

double slope_oracle(const QuantumNoiseInputs &in) {
  const double h = in.optics().wavelength * 1e-6;
  return (output_power(h, in) - output_power(-h, in)) / (2.0 * h);
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed(); });
}

VerificationReport run_verification(std::size_t draws, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return std::exp(std::log(lo) + unit(rng) * (std::log(hi) - std::log(lo)));
  };

  VerificationReport report;

  {
    CheckResult c{"force_psd_vs_closed_form_grid", 0.0, 1e-12, 0};
    for (int i = 0; i <= 10; ++i) {
      const double refl = i / 10.0;
      for (double p : {1e-3, 1.0, 1e3}) {
        const auto optics = nd_yag(p);
        c.max_error = std::max(c.max_error, rel_error(force_psd(p, refl, optics),
                                                      closed_form_force_psd(p, refl, optics)));
        ++c.samples;
      }
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"force_psd_vs_closed_form_random", 0.0, 1e-12, 0};
    for (std::size_t i = 0; i < draws; ++i) {
      const double refl = unit(rng);
      const double p = log_uniform(1e-4, 1e4);
      OpticsParams optics = nd_yag(p);
      optics.wavelength = log_uniform(300e-9, 3e-6);
      c.max_error = std::max(c.max_error, rel_error(force_psd(p, refl, optics),
                                                    closed_form_force_psd(p, refl, optics)));
      ++c.samples;
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"energy_conservation_membrane", 0.0, 1e-14, 0};
    for (std::size_t i = 0; i < draws; ++i) {
      const double refl = unit(rng);
      const double p = log_uniform(1e-4, 1e4);
      const auto in = incident_fields(p, nd_yag(p));
      const auto out = membrane_scatter(in, std::sqrt(refl), std::sqrt(1.0 - refl));
      const double before = in.a.coefficient_energy() + in.b.coefficient_energy();
      const double after = out.c.coefficient_energy() + out.d.coefficient_energy();
      c.max_error = std::max(c.max_error, rel_error(after, before));
      ++c.samples;
    }
    report.checks.push_back(c);
  }

  {
    // Relative to the output-port vacuum coupling at the same power.
    CheckResult c{"input_port_vacuum_null_force", 0.0, 1e-12, 0};
    for (std::size_t i = 0; i < draws; ++i) {
      const double refl = unit(rng);
      const double p = log_uniform(1e-4, 1e4);
      const auto optics = nd_yag(p);
      const auto in = incident_fields(p, optics, VacuumPort::input);
      const auto out = membrane_scatter(in, std::sqrt(refl), std::sqrt(1.0 - refl));
      const auto f = rp_force_coefficients(in, out);
      const double scale = 2.0 / c_light * std::sqrt(2.0 * hbar * optics.omega0() * p);
      c.max_error = std::max({c.max_error, std::abs(f.vacuum1) / scale,
                              std::abs(f.vacuum2) / scale, std::abs(f.dc) / (scale * scale)});
      ++c.samples;
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"signal_slope_vs_finite_difference", 0.0, 1e-6, 0};
    for (std::size_t i = 0; i < draws; ++i) {
      OpticsParams optics = nd_yag(log_uniform(1e-3, 1e3));
      optics.phi0 = 0.05 + unit(rng) * (constants::pi - 0.1);
      const MembraneParams mem{.reflectance = 0.01 + 0.99 * unit(rng), .f_mem = 1.0,
                               .mass = 1.0, .q = 1.0, .temperature = 0.0};
      const QuantumNoiseInputs qi(optics, mem, RecyclingGains{}, false);
      c.max_error = std::max(c.max_error, rel_error(slope_oracle(qi), signal_slope(qi)));
      ++c.samples;
    }
    report.checks.push_back(c);
  }

  {
    CheckResult c{"shot_rad_product_vs_hbar2_H2", 0.0, 1e-12, 0};
    for (std::size_t i = 0; i < draws; ++i) {
      const MembraneParams mem{.reflectance = 0.01 + 0.99 * unit(rng),
                               .f_mem = log_uniform(1e2, 1e7),
                               .mass = log_uniform(1e-13, 1e-3),
                               .q = log_uniform(10.0, 1e9),
                               .temperature = 300.0 * unit(rng)};
      OpticsParams optics = nd_yag(log_uniform(1e-3, 1e4));
      optics.wavelength = log_uniform(300e-9, 3e-6);
      const double r_sr = 0.999 * unit(rng);
      const RecyclingGains gains = derive_recycling(
          {.r_sr = r_sr, .r_pr = std::nullopt, .arm_length = log_uniform(0.01, 10.0),
           .sr_distance = 0.1 * unit(rng)});
      for (bool sr : {true, false}) {
        const QuantumNoiseInputs qi(optics, mem, gains, sr);
        for (int k = 0; k < 10; ++k) {
          const double f = mem.f_mem * log_uniform(1e-3, 1e2);
          const double shot = shot_asd(f, qi);
          const double rad = rad_asd(f, qi);
          const double h = susceptibility_magnitude(f, mem);
          c.max_error =
              std::max(c.max_error, rel_error(shot * shot * rad * rad, hbar * hbar * h * h));
          ++c.samples;
        }
      }
    }
    report.checks.push_back(c);
  }

  return report;
}

} // namespace msnoise::oracle
