#include "msnoise/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msnoise {

std::vector<Violation> validate(const FrequencyGrid &grid) {
  std::vector<Violation> out;
  if (!std::isfinite(grid.f_min) || grid.f_min <= 0.0)
    out.push_back({"grid.f_min", "f_min must be positive"});
  if (!std::isfinite(grid.f_max) || grid.f_max < grid.f_min)
    out.push_back({"grid.f_max", "f_max must be finite and >= f_min"});
  if (grid.n_points < 1)
    out.push_back({"grid.n_points", "at least one point required"});
  else if (grid.n_points > 1 && grid.f_max == grid.f_min)
    out.push_back({"grid.n_points", "several points need f_max > f_min"});
  return out;
}

std::vector<double> FrequencyGrid::points() const {
  throw_if_invalid(validate(*this));
  std::vector<double> f(n_points);
  f.front() = f_min;
  if (n_points > 1) {
    const double steps = static_cast<double>(n_points - 1);
    if (spacing == GridSpacing::log) {
      const double lo = std::log(f_min);
      const double span = std::log(f_max) - lo;
      for (std::size_t i = 1; i + 1 < n_points; ++i)
        f[i] = std::exp(lo + span * (static_cast<double>(i) / steps));
    } else {
      const double step = (f_max - f_min) / steps;
      for (std::size_t i = 1; i + 1 < n_points; ++i)
        f[i] = f_min + static_cast<double>(i) * step;
    }
    f.back() = f_max;
  }
  if (std::adjacent_find(f.begin(), f.end(), std::greater_equal<>()) != f.end())
    throw ValidationError("grid.n_points", "grid is not strictly increasing at double precision");
  return f;
}

std::string_view to_string(GridSpacing spacing) {
  return spacing == GridSpacing::log ? "log" : "linear";
}

std::string_view to_string(SpectrumUnit unit) {
  return unit == SpectrumUnit::meters_per_root_hz ? "m/sqrt(Hz)" : "N/sqrt(Hz)";
}

NoiseSpectrum::NoiseSpectrum(FrequencyGrid grid) : grid_(grid), frequencies_(grid.points()) {}

void NoiseSpectrum::add_channel(std::string name, SpectrumUnit unit, std::vector<double> values) {
  if (has_channel(name))
    throw std::invalid_argument("duplicate channel '" + name + "'");
  if (values.size() != frequencies_.size())
    throw std::invalid_argument("channel '" + name + "' length does not match the grid");
  for (double v : values)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("channel '" + name + "' has a negative or non-finite value");
  channels_.push_back({std::move(name), unit, std::move(values)});
}

bool NoiseSpectrum::has_channel(std::string_view name) const {
  return std::any_of(channels_.begin(), channels_.end(),
                     [&](const SpectrumChannel &c) { return c.name == name; });
}

const SpectrumChannel &NoiseSpectrum::channel(std::string_view name) const {
  for (const auto &c : channels_)
    if (c.name == name)
      return c;
  throw std::out_of_range("no channel '" + std::string(name) + "'");
}

} // namespace msnoise
