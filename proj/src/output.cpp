#include "msnoise/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace msnoise {

using nlohmann::ordered_json;

std::string format_sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", value);
  return buf;
}

namespace {

ordered_json number_or_null(double v) {
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

ordered_json optional_number(const std::optional<double> &v) {
  return v ? number_or_null(*v) : ordered_json(nullptr);
}

ordered_json params_block(const InterferometerConfig &cfg, const BudgetOptions &options) {
  ordered_json p;
  for (auto key : config_keys()) {
    if (key == "grid.spacing")
      p[std::string(key)] = std::string(to_string(cfg.grid.spacing));
    else if (key == "grid.n_points")
      p[std::string(key)] = cfg.grid.n_points;
    else
      p[std::string(key)] = optional_number(get_config_number(cfg, key));
  }
  const auto gains = derive_recycling(cfg.recycling);
  p["sr_enabled"] = options.sr_enabled;
  p["damping"] = std::string(to_string(options.damping));
  p["g_PR"] = gains.g_pr;
  p["g_SR"] = gains.g_sr;
  p["f_SR"] = number_or_null(gains.f_sr);
  p["input_power"] = input_power(cfg.optics, gains);
  return p;
}

} // namespace

void write_csv(std::ostream &os, const NoiseSpectrum &spectrum) {
  os << "frequency_hz";
  for (const auto &c : spectrum.channels())
    os << ',' << c.name;
  os << '\n';
  const auto f = spectrum.frequencies();
  for (std::size_t i = 0; i < f.size(); ++i) {
    os << format_sci(f[i]);
    for (const auto &c : spectrum.channels())
      os << ',' << format_sci(c.values[i]);
    os << '\n';
  }
}

void write_json(std::ostream &os, const NoiseSpectrum &spectrum, const InterferometerConfig &cfg,
                const BudgetOptions &options) {
  ordered_json doc;
  doc["params"] = params_block(cfg, options);
  doc["units"] = std::string(to_string(SpectrumUnit::meters_per_root_hz));
  doc["frequency_hz"] = std::vector<double>(spectrum.frequencies().begin(),
                                            spectrum.frequencies().end());
  for (const auto &c : spectrum.channels())
    doc[c.name] = c.values;
  os << doc.dump(2) << '\n';
}

void write_sweep_csv(std::ostream &os, std::string_view param, std::span<const SweepRow> rows) {
  os << param << ",g_SR,f_SR_hz,shot,rad,thermal,rad_over_shot,rad_over_thermal\n";
  auto opt = [](const std::optional<double> &v) { return v ? format_sci(*v) : std::string(); };
  for (const auto &r : rows) {
    os << format_sci(r.value) << ',' << format_sci(r.g_sr) << ',' << format_sci(r.f_sr) << ','
       << format_sci(r.shot) << ',' << format_sci(r.rad) << ',' << format_sci(r.thermal) << ','
       << opt(r.rad_over_shot) << ',' << opt(r.rad_over_thermal) << '\n';
  }
}

void write_sweep_json(std::ostream &os, std::string_view param, std::span<const SweepRow> rows) {
  ordered_json doc;
  doc["param"] = std::string(param);
  doc["rows"] = ordered_json::array();
  for (const auto &r : rows) {
    doc["rows"].push_back({{"value", r.value},
                           {"g_SR", r.g_sr},
                           {"f_SR_hz", number_or_null(r.f_sr)},
                           {"shot", r.shot},
                           {"rad", r.rad},
                           {"thermal", r.thermal},
                           {"rad_over_shot", optional_number(r.rad_over_shot)},
                           {"rad_over_thermal", optional_number(r.rad_over_thermal)}});
  }
  os << doc.dump(2) << '\n';
}

} // namespace msnoise
