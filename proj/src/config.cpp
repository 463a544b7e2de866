#include "msnoise/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace msnoise {

namespace {

constexpr std::array<std::string_view, 16> kKeys{
    "lambda",         "power_at_bs",      "phi0",         "membrane.R",
    "membrane.f_mem", "membrane.m_eff",   "membrane.Q",   "membrane.T",
    "recycling.r_SR", "recycling.r_PR",   "geometry.L",   "geometry.L_SR",
    "grid.f_min",     "grid.f_max",       "grid.n_points", "grid.spacing"};

constexpr std::array<std::string_view, 8> kRequired{
    "lambda",     "power_at_bs", "membrane.R", "membrane.f_mem",
    "membrane.m_eff", "membrane.Q", "membrane.T", "geometry.L"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key) {
  return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char *expected) {
  throw ValidationError(std::string(key), "cannot parse '" + std::string(value) + "' as " + expected);
}

double parse_double(std::string_view key, std::string_view value) {
  if (!value.empty() && value.front() == '+')
    value.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    bad_value(key, value, "a number");
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    bad_value(key, value, "a non-negative integer");
  return out;
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

InterferometerConfig defaults() {
  InterferometerConfig cfg;
  cfg.optics.phi0 = 0.0;
  cfg.recycling.sr_distance = 0.0;
  return cfg;
}

} // namespace

std::span<const std::string_view> config_keys() { return kKeys; }

std::vector<Violation> validate(const InterferometerConfig &cfg) {
  std::vector<Violation> out;
  for (auto part : {validate(cfg.optics), validate(cfg.membrane), validate(cfg.recycling),
                    validate(cfg.grid)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

void set_config_number(InterferometerConfig &cfg, std::string_view key, double value) {
  if (key == "lambda")
    cfg.optics.wavelength = value;
  else if (key == "power_at_bs")
    cfg.optics.power_at_bs = value;
  else if (key == "phi0")
    cfg.optics.phi0 = value;
  else if (key == "membrane.R")
    cfg.membrane.reflectance = value;
  else if (key == "membrane.f_mem")
    cfg.membrane.f_mem = value;
  else if (key == "membrane.m_eff")
    cfg.membrane.mass = value;
  else if (key == "membrane.Q")
    cfg.membrane.q = value;
  else if (key == "membrane.T")
    cfg.membrane.temperature = value;
  else if (key == "recycling.r_SR")
    cfg.recycling.r_sr = value;
  else if (key == "recycling.r_PR")
    cfg.recycling.r_pr = value;
  else if (key == "geometry.L")
    cfg.recycling.arm_length = value;
  else if (key == "geometry.L_SR")
    cfg.recycling.sr_distance = value;
  else if (key == "grid.f_min")
    cfg.grid.f_min = value;
  else if (key == "grid.f_max")
    cfg.grid.f_max = value;
  else if (key == "grid.n_points") {
    if (!(value >= 0.0) || value != std::floor(value) || value > 1e12)
      throw ValidationError(std::string(key), "must be a non-negative integer");
    cfg.grid.n_points = static_cast<std::size_t>(value);
  } else if (key == "grid.spacing")
    throw ValidationError(std::string(key), "not a numeric key");
  else
    throw ValidationError(std::string(key), "unknown key");
}

void set_config_value(InterferometerConfig &cfg, std::string_view key, std::string_view value) {
  if (key == "grid.spacing") {
    if (value == "log")
      cfg.grid.spacing = GridSpacing::log;
    else if (value == "linear")
      cfg.grid.spacing = GridSpacing::linear;
    else
      bad_value(key, value, "log or linear");
  } else if (key == "grid.n_points") {
    cfg.grid.n_points = parse_count(key, value);
  } else if (is_known(key)) {
    set_config_number(cfg, key, parse_double(key, value));
  } else {
    throw ValidationError(std::string(key), "unknown key");
  }
}

std::optional<double> get_config_number(const InterferometerConfig &cfg, std::string_view key) {
  if (key == "lambda")
    return cfg.optics.wavelength;
  if (key == "power_at_bs")
    return cfg.optics.power_at_bs;
  if (key == "phi0")
    return cfg.optics.phi0;
  if (key == "membrane.R")
    return cfg.membrane.reflectance;
  if (key == "membrane.f_mem")
    return cfg.membrane.f_mem;
  if (key == "membrane.m_eff")
    return cfg.membrane.mass;
  if (key == "membrane.Q")
    return cfg.membrane.q;
  if (key == "membrane.T")
    return cfg.membrane.temperature;
  if (key == "recycling.r_SR")
    return cfg.recycling.r_sr;
  if (key == "recycling.r_PR")
    return cfg.recycling.r_pr;
  if (key == "geometry.L")
    return cfg.recycling.arm_length;
  if (key == "geometry.L_SR")
    return cfg.recycling.sr_distance;
  if (key == "grid.f_min")
    return cfg.grid.f_min;
  if (key == "grid.f_max")
    return cfg.grid.f_max;
  if (key == "grid.n_points")
    return static_cast<double>(cfg.grid.n_points);
  if (key == "grid.spacing")
    throw ValidationError(std::string(key), "not a numeric key");
  throw ValidationError(std::string(key), "unknown key");
}

InterferometerConfig parse_config(std::string_view text) {
  std::vector<Violation> errors;
  std::map<std::string, std::string, std::less<>> entries;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back({std::string(line), where + "expected 'key = value'"});
      continue;
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!is_known(key)) {
      errors.push_back({std::string(key), where + "unknown key"});
      continue;
    }
    if (value.empty()) {
      errors.push_back({std::string(key), where + "missing value"});
      continue;
    }
    if (!entries.emplace(std::string(key), std::string(value)).second)
      errors.push_back({std::string(key), where + "duplicate key"});
  }

  for (auto key : kRequired)
    if (!entries.contains(key))
      errors.push_back({std::string(key), "required key missing"});

  InterferometerConfig cfg = defaults();
  for (const auto &[key, value] : entries) {
    try {
      set_config_value(cfg, key, value);
    } catch (const ValidationError &e) {
      errors.insert(errors.end(), e.violations().begin(), e.violations().end());
    }
  }
  throw_if_invalid(std::move(errors));
  throw_if_invalid(validate(cfg));
  return cfg;
}

InterferometerConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const InterferometerConfig &cfg) {
  std::ostringstream os;
  for (auto key : kKeys) {
    if (key == "grid.spacing") {
      os << key << " = " << to_string(cfg.grid.spacing) << '\n';
      continue;
    }
    if (key == "grid.n_points") {
      os << key << " = " << cfg.grid.n_points << '\n';
      continue;
    }
    const auto value = get_config_number(cfg, key);
    if (value)
      os << key << " = " << shortest(*value) << '\n';
    else
      os << "# " << key << " = (absent: no mirror)\n";
  }
  return os.str();
}

InterferometerConfig table1_preset() {
  InterferometerConfig cfg;
  cfg.optics = {.wavelength = 1064e-9, .power_at_bs = 1.0, .phi0 = 0.0};
  cfg.membrane = {.reflectance = 0.35, .f_mem = 75e3, .mass = 125e-12, .q = 1e7,
                  .temperature = 1.0};
  cfg.recycling = {.r_sr = 0.998, .r_pr = std::nullopt, .arm_length = 0.6, .sr_distance = 0.03};
  cfg.grid = FrequencyGrid{};
  return cfg;
}

} // namespace msnoise
