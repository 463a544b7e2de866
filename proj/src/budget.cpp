#include "msnoise/budget.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

namespace msnoise {

using constants::c_light;
using constants::hbar;
using constants::pi;

std::string_view to_string(Channel channel) {
  switch (channel) {
  case Channel::shot:
    return "shot";
  case Channel::rad:
    return "rad";
  case Channel::thermal_viscous:
    return "thermal_viscous";
  case Channel::thermal_structural:
    return "thermal_structural";
  case Channel::total:
    return "total";
  case Channel::sql:
    return "sql";
  }
  return "?";
}

Channel channel_from_string(std::string_view name) {
  for (Channel c : all_channels)
    if (to_string(c) == name)
      return c;
  throw ValidationError("channel", "unknown channel '" + std::string(name) + "'");
}

std::string_view to_string(DampingSelection damping) {
  switch (damping) {
  case DampingSelection::viscous:
    return "viscous";
  case DampingSelection::structural:
    return "structural";
  case DampingSelection::both:
    return "both";
  }
  return "?";
}

ChannelSet effective_channels(const BudgetOptions &options) {
  ChannelSet set = options.channels;
  if (options.damping == DampingSelection::viscous)
    set.erase(Channel::thermal_structural);
  if (options.damping == DampingSelection::structural)
    set.erase(Channel::thermal_viscous);
  return set;
}

DampingModel total_damping_model(DampingSelection damping) {
  return damping == DampingSelection::structural ? DampingModel::structural
                                                 : DampingModel::viscous;
}

double BinNoise::get(Channel channel) const {
  switch (channel) {
  case Channel::shot:
    return shot;
  case Channel::rad:
    return rad;
  case Channel::thermal_viscous:
    return thermal_viscous;
  case Channel::thermal_structural:
    return thermal_structural;
  case Channel::total:
    return total;
  case Channel::sql:
    return sql;
  }
  return 0.0;
}

QuantumNoiseInputs make_quantum_inputs(const InterferometerConfig &cfg, bool sr_enabled) {
  std::vector<Violation> errors = validate(cfg.optics);
  for (auto v : validate(cfg.membrane))
    errors.push_back(v);
  for (auto v : validate(cfg.recycling))
    errors.push_back(v);
  if (sr_enabled && !cfg.recycling.r_sr)
    errors.push_back({"recycling.r_SR", "signal recycling requested but no SR mirror configured"});
  throw_if_invalid(std::move(errors));
  return QuantumNoiseInputs(cfg.optics, cfg.membrane, derive_recycling(cfg.recycling), sr_enabled);
}

BudgetContext::BudgetContext(const InterferometerConfig &cfg, const BudgetOptions &options)
    : inputs_(make_quantum_inputs(cfg, options.sr_enabled)),
      channels_(effective_channels(options)),
      total_model_(total_damping_model(options.damping)) {
  if (channels_.empty())
    throw ValidationError("channels", "no channel selected");
  if (channels_.contains(Channel::shot))
    check_shot_defined(inputs_);
}

BinNoise BudgetContext::evaluate(double f) const {
  const auto &mem = inputs_.membrane();
  BinNoise b;
  double total_power = 0.0;
  if (channels_.contains(Channel::shot)) {
    b.shot = shot_asd(f, inputs_);
    total_power += b.shot * b.shot;
  }
  if (channels_.contains(Channel::rad)) {
    b.rad = rad_asd(f, inputs_);
    total_power += b.rad * b.rad;
  }
  if (channels_.contains(Channel::thermal_viscous)) {
    b.thermal_viscous = thermal_displacement_asd(f, mem, DampingModel::viscous);
    if (total_model_ == DampingModel::viscous)
      total_power += b.thermal_viscous * b.thermal_viscous;
  }
  if (channels_.contains(Channel::thermal_structural)) {
    b.thermal_structural = thermal_displacement_asd(f, mem, DampingModel::structural);
    if (total_model_ == DampingModel::structural)
      total_power += b.thermal_structural * b.thermal_structural;
  }
  if (channels_.contains(Channel::total))
    b.total = std::sqrt(total_power);
  if (channels_.contains(Channel::sql))
    b.sql = sql_asd(f, mem);
  return b;
}

namespace {

NoiseSpectrum assemble(const FrequencyGrid &grid, const BudgetContext &ctx,
                       const std::vector<BinNoise> &bins) {
  NoiseSpectrum spectrum(grid);
  for (Channel c : all_channels) {
    if (!ctx.channels().contains(c))
      continue;
    std::vector<double> values(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i)
      values[i] = bins[i].get(c);
    spectrum.add_channel(std::string(to_string(c)), SpectrumUnit::meters_per_root_hz,
                         std::move(values));
  }
  return spectrum;
}

} // namespace

NoiseSpectrum compute_budget_serial(const FrequencyGrid &grid, const InterferometerConfig &cfg,
                                    const BudgetOptions &options) {
  const BudgetContext ctx(cfg, options);
  const auto f = grid.points();
  std::vector<BinNoise> bins(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    bins[i] = ctx.evaluate(f[i]);
  return assemble(grid, ctx, bins);
}

NoiseSpectrum compute_budget(const FrequencyGrid &grid, const InterferometerConfig &cfg,
                             const BudgetOptions &options) {
  const BudgetContext ctx(cfg, options);
  const auto f = grid.points();
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  std::vector<BinNoise> bins(f.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      bins[i] = ctx.evaluate(f[i]);
    } catch (...) {
#pragma omp critical(msnoise_budget_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return assemble(grid, ctx, bins);
}

double ratio_at(double f, Channel a, Channel b, const InterferometerConfig &cfg,
                const BudgetOptions &options) {
  BudgetOptions opts = options;
  opts.channels = ChannelSet{a, b};
  if (a == Channel::total || b == Channel::total)
    opts.channels = ChannelSet::all();
  const BudgetContext ctx(cfg, opts);
  for (Channel c : {a, b})
    if (!ctx.channels().contains(c))
      throw ValidationError("channel", std::string(to_string(c)) +
                                             " is not defined for damping '" +
                                             std::string(to_string(options.damping)) + "'");
  const BinNoise bin = ctx.evaluate(f);
  const double den = bin.get(b);
  if (den == 0.0)
    throw std::domain_error("ratio_at: " + std::string(to_string(b)) + " is zero at f = " +
                            std::to_string(f));
  return bin.get(a) / den;
}

PowerSolution solve_power(double target_ratio, double f_eval, const InterferometerConfig &cfg,
                          bool sr_enabled) {
  if (!(target_ratio > 0.0) || !std::isfinite(target_ratio))
    throw std::invalid_argument("solve_power: target ratio must be positive");
  if (!(f_eval >= 0.0))
    throw std::invalid_argument("solve_power: f_eval must be non-negative");
  const QuantumNoiseInputs qi = make_quantum_inputs(cfg, sr_enabled);
  const auto &mem = qi.membrane();
  if (!(mem.reflectance > 0.0))
    throw std::domain_error("solve_power: no solution for a fully transparent membrane");
  const double fringe = std::abs(std::cos(0.5 * qi.optics().phi0));
  if (fringe == 0.0)
    throw std::domain_error("solve_power: zero fringe slope");

  const double h = susceptibility_magnitude(f_eval, mem);
  PowerSolution s;
  s.effective_power = target_ratio * c_light * qi.optics().wavelength * qi.pole_factor(f_eval) /
                      (16.0 * pi * mem.reflectance * h * fringe);
  s.power_at_bs = s.effective_power / qi.signal_gain();
  s.input_power = s.power_at_bs / qi.gains().g_pr;
  s.beyond_sr_pole = f_eval >= qi.gains().f_sr;
  return s;
}

ThermalPowerSolution solve_thermal_power(double temperature, double q, double margin,
                                         double f_eval, const InterferometerConfig &cfg,
                                         bool sr_enabled, DampingModel model) {
  if (!(margin > 0.0) || !std::isfinite(margin))
    throw std::invalid_argument("solve_thermal_power: margin must be positive");
  InterferometerConfig target = cfg;
  target.membrane.temperature = temperature;
  target.membrane.q = q;
  const QuantumNoiseInputs qi = make_quantum_inputs(target, sr_enabled);
  const auto &mem = qi.membrane();
  if (!(mem.reflectance > 0.0))
    throw std::domain_error("solve_thermal_power: no solution for a fully transparent membrane");

  // rad^2 / thermal^2 = 16 pi hbar r^2 P_eff / (c lambda (1 + (f/f_SR)^2) F_th^2); |H| cancels.
  const double force = thermal_force_asd(f_eval, mem, model);
  ThermalPowerSolution s;
  s.effective_power = margin * margin * force * force * c_light * qi.optics().wavelength *
                      qi.pole_factor(f_eval) / (16.0 * pi * hbar * mem.reflectance);
  s.power_at_bs = s.effective_power / qi.signal_gain();
  const double ref = cfg.membrane.temperature / cfg.membrane.q;
  s.thermal_scale = ref > 0.0 ? std::sqrt((temperature / q) / ref) : INFINITY;
  return s;
}

std::vector<SweepRow> sweep(std::string_view param, std::span<const double> values, double f_eval,
                            const InterferometerConfig &cfg, const BudgetOptions &options) {
  (void)get_config_number(cfg, param); // rejects unknown and non-numeric keys

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v))
      throw ValidationError(std::string(param), "sweep values must be finite");
    InterferometerConfig c = cfg;
    set_config_number(c, param, v);

    const BudgetContext ctx(c, options);
    const BinNoise bin = ctx.evaluate(f_eval);
    SweepRow row;
    row.value = v;
    row.g_sr = ctx.inputs().gains().g_sr;
    row.f_sr = ctx.inputs().gains().f_sr;
    row.shot = bin.shot;
    row.rad = bin.rad;
    row.thermal = ctx.total_model() == DampingModel::viscous ? bin.thermal_viscous
                                                             : bin.thermal_structural;
    if (row.shot > 0.0)
      row.rad_over_shot = row.rad / row.shot;
    if (row.thermal > 0.0)
      row.rad_over_thermal = row.rad / row.thermal;
    rows.push_back(row);
  }
  return rows;
}

} // namespace msnoise
