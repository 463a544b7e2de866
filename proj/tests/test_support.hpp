#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "msnoise/config.hpp"

namespace msnoise::test {

inline double rel_error(double value, double reference) {
  if (value == reference)
    return 0.0;
  return std::abs(value - reference) / std::max(std::abs(value), std::abs(reference));
}

/// Random but valid interferometer setups for property tests.
class SetupGenerator {
public:
  explicit SetupGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  InterferometerConfig config() {
    InterferometerConfig cfg;
    cfg.optics = {.wavelength = log_uniform(300e-9, 3e-6),
                  .power_at_bs = log_uniform(1e-3, 1e4),
                  .phi0 = 0.0};
    cfg.membrane = {.reflectance = uniform(0.01, 1.0),
                    .f_mem = log_uniform(1e2, 1e7),
                    .mass = log_uniform(1e-13, 1e-3),
                    .q = log_uniform(10.0, 1e9),
                    .temperature = uniform(0.0, 300.0)};
    cfg.recycling = {.r_sr = uniform(0.0, 0.9995),
                     .r_pr = uniform(0.0, 0.999),
                     .arm_length = log_uniform(0.01, 10.0),
                     .sr_distance = uniform(0.0, 0.5)};
    return cfg;
  }

private:
  std::mt19937_64 rng_;
};

} // namespace msnoise::test
