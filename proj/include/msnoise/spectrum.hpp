#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msnoise/error.hpp"

namespace msnoise {

enum class GridSpacing { log, linear };

/// Frequency axis description. Endpoints are reproduced exactly by points().
struct FrequencyGrid {
  double f_min = 1e3;
  double f_max = 1e6;
  std::size_t n_points = 1000;
  GridSpacing spacing = GridSpacing::log;

  /// Strictly increasing abscissa. Throws ValidationError for an invalid grid.
  std::vector<double> points() const;

  bool operator==(const FrequencyGrid &) const = default;
};

std::vector<Violation> validate(const FrequencyGrid &grid);

std::string_view to_string(GridSpacing spacing);

enum class SpectrumUnit { meters_per_root_hz, newtons_per_root_hz };

std::string_view to_string(SpectrumUnit unit);

struct SpectrumChannel {
  std::string name;
  SpectrumUnit unit = SpectrumUnit::meters_per_root_hz;
  std::vector<double> values;
};

/// Named amplitude spectral densities sampled on a common frequency axis.
class NoiseSpectrum {
public:
  NoiseSpectrum() = default;
  explicit NoiseSpectrum(FrequencyGrid grid);

  const FrequencyGrid &grid() const { return grid_; }
  std::span<const double> frequencies() const { return frequencies_; }
  std::size_t size() const { return frequencies_.size(); }

  /// Values must match the grid length and be finite and non-negative;
  /// names must be unique.
  void add_channel(std::string name, SpectrumUnit unit, std::vector<double> values);

  const std::vector<SpectrumChannel> &channels() const { return channels_; }
  bool has_channel(std::string_view name) const;
  /// Throws std::out_of_range for an unknown name.
  const SpectrumChannel &channel(std::string_view name) const;

private:
  FrequencyGrid grid_;
  std::vector<double> frequencies_;
  std::vector<SpectrumChannel> channels_;
};

} // namespace msnoise
