#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msnoise/config.hpp"
#include "msnoise/mechanics.hpp"
#include "msnoise/quantum.hpp"
#include "msnoise/spectrum.hpp"

namespace msnoise {

enum class Channel : std::uint8_t { shot, rad, thermal_viscous, thermal_structural, total, sql };

inline constexpr std::array<Channel, 6> all_channels{
    Channel::shot,  Channel::rad,   Channel::thermal_viscous, Channel::thermal_structural,
    Channel::total, Channel::sql};

std::string_view to_string(Channel channel);
/// Throws ValidationError for an unknown name.
Channel channel_from_string(std::string_view name);

class ChannelSet {
public:
  constexpr ChannelSet() = default;
  constexpr ChannelSet(std::initializer_list<Channel> channels) {
    for (Channel c : channels)
      insert(c);
  }
  static constexpr ChannelSet all() {
    ChannelSet s;
    for (Channel c : all_channels)
      s.insert(c);
    return s;
  }

  constexpr void insert(Channel c) { bits_ |= mask(c); }
  constexpr void erase(Channel c) { bits_ &= static_cast<std::uint8_t>(~mask(c)); }
  constexpr bool contains(Channel c) const { return (bits_ & mask(c)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool operator==(const ChannelSet &) const = default;

private:
  static constexpr std::uint8_t mask(Channel c) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }
  std::uint8_t bits_ = 0;
};

enum class DampingSelection { viscous, structural, both };

std::string_view to_string(DampingSelection damping);

struct BudgetOptions {
  bool sr_enabled = true;
  /// `both` reports both thermal channels and uses viscous in `total`.
  DampingSelection damping = DampingSelection::both;
  ChannelSet channels = ChannelSet::all();
};

/// Channels actually emitted: `options.channels` with thermal channels
/// outside the damping selection removed.
ChannelSet effective_channels(const BudgetOptions &options);

/// Model entering `total`.
DampingModel total_damping_model(DampingSelection damping);

/// Every channel at a single frequency.
struct BinNoise {
  double shot = 0.0;
  double rad = 0.0;
  double thermal_viscous = 0.0;
  double thermal_structural = 0.0;
  double total = 0.0;
  double sql = 0.0;

  double get(Channel channel) const;
};

/// Precomputed, validated state shared by every frequency bin.
class BudgetContext {
public:
  /// Throws ValidationError on invalid parameters, std::domain_error when a
  /// selected channel is undefined (e.g. shot noise at zero power), and
  /// ValidationError when sr is requested without a signal-recycling mirror.
  BudgetContext(const InterferometerConfig &cfg, const BudgetOptions &options);

  const QuantumNoiseInputs &inputs() const { return inputs_; }
  ChannelSet channels() const { return channels_; }
  DampingModel total_model() const { return total_model_; }

  /// Unselected channels are 0. Deterministic per bin.
  BinNoise evaluate(double f) const;

private:
  QuantumNoiseInputs inputs_;
  ChannelSet channels_;
  DampingModel total_model_;
};

QuantumNoiseInputs make_quantum_inputs(const InterferometerConfig &cfg, bool sr_enabled);

/// Noise budget over `grid`, bins evaluated in parallel with OpenMP. The
/// result is bit-identical to compute_budget_serial() for any thread count.
NoiseSpectrum compute_budget(const FrequencyGrid &grid, const InterferometerConfig &cfg,
                             const BudgetOptions &options);

/// Single-threaded reference implementation of compute_budget().
NoiseSpectrum compute_budget_serial(const FrequencyGrid &grid, const InterferometerConfig &cfg,
                                    const BudgetOptions &options);

/// ASD ratio a/b at f. Throws std::domain_error if b is zero there.
double ratio_at(double f, Channel a, Channel b, const InterferometerConfig &cfg,
                const BudgetOptions &options);

struct PowerSolution {
  double effective_power = 0.0; ///< g_PR g_SR P0, W
  double power_at_bs = 0.0;     ///< g_PR P0, W
  double input_power = 0.0;     ///< P0, W
  bool beyond_sr_pole = false;  ///< f_eval >= f_SR
};

/// Power at which rad/shot equals `target_ratio` at `f_eval`. Exact inversion
/// of rad/shot = 16 pi r^2 P_eff |H| |cos(phi0/2)| / (c lambda (1 + (f/f_SR)^2)).
/// Throws std::domain_error for r = 0, std::invalid_argument for ratio <= 0.
PowerSolution solve_power(double target_ratio, double f_eval, const InterferometerConfig &cfg,
                          bool sr_enabled);

struct ThermalPowerSolution {
  double power_at_bs = 0.0; ///< W
  double effective_power = 0.0;
  /// Thermal ASD scale relative to the configured membrane: sqrt((T/Q) / (T_cfg/Q_cfg)).
  double thermal_scale = 0.0;
};

/// Beam-splitter power at which rad/thermal equals `margin` at `f_eval` for
/// a membrane at temperature `temperature` with quality factor `q`. The
/// required power is proportional to margin^2 T / Q.
ThermalPowerSolution solve_thermal_power(double temperature, double q, double margin,
                                         double f_eval, const InterferometerConfig &cfg,
                                         bool sr_enabled,
                                         DampingModel model = DampingModel::viscous);

struct SweepRow {
  double value = 0.0;
  double g_sr = 1.0;
  double f_sr = 0.0;
  double shot = 0.0;
  double rad = 0.0;
  double thermal = 0.0;
  std::optional<double> rad_over_shot;
  std::optional<double> rad_over_thermal;
};

/// Sets `param` (any numeric config key) to each value in turn and evaluates
/// every channel at `f_eval`. Rows follow the order of `values`.
std::vector<SweepRow> sweep(std::string_view param, std::span<const double> values, double f_eval,
                            const InterferometerConfig &cfg, const BudgetOptions &options);

} // namespace msnoise
