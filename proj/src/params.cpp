#include "msnoise/params.hpp"

#include <cmath>
#include <numeric>

namespace msnoise {

namespace {

std::string describe(const std::vector<Violation> &violations) {
  std::string what = "invalid parameters:";
  for (const auto &v : violations)
    what += " " + v.field + ": " + v.message + ";";
  return what;
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

ValidationError::ValidationError(std::string field, std::string message)
    : ValidationError(std::vector<Violation>{{std::move(field), std::move(message)}}) {}

void throw_if_invalid(std::vector<Violation> violations) {
  if (!violations.empty())
    throw ValidationError(std::move(violations));
}

std::vector<Violation> validate(const MembraneParams &mem) {
  std::vector<Violation> out;
  if (!finite(mem.reflectance) || mem.reflectance < 0.0 || mem.reflectance > 1.0)
    out.push_back({"membrane.R", "R out of [0,1]"});
  if (!finite(mem.f_mem) || mem.f_mem <= 0.0)
    out.push_back({"membrane.f_mem", "resonance frequency must be positive"});
  if (!finite(mem.mass) || mem.mass <= 0.0)
    out.push_back({"membrane.m_eff", "mass must be positive"});
  if (!finite(mem.q) || mem.q <= 0.0)
    out.push_back({"membrane.Q", "quality factor must be positive"});
  if (!finite(mem.temperature) || mem.temperature < 0.0)
    out.push_back({"membrane.T", "temperature must be non-negative"});
  return out;
}

std::vector<Violation> validate(const OpticsParams &optics) {
  std::vector<Violation> out;
  if (!finite(optics.wavelength) || optics.wavelength <= 0.0)
    out.push_back({"lambda", "wavelength must be positive"});
  if (!finite(optics.power_at_bs) || optics.power_at_bs < 0.0)
    out.push_back({"power_at_bs", "power must be non-negative"});
  if (!finite(optics.phi0) || optics.phi0 < -constants::pi || optics.phi0 >= constants::pi)
    out.push_back({"phi0", "phi0 out of [-pi,pi)"});
  return out;
}

std::vector<Violation> validate(const RecyclingParams &rp) {
  std::vector<Violation> out;
  auto check_mirror = [&](const std::optional<double> &r, const char *field) {
    if (r && (!finite(*r) || *r < 0.0 || *r >= 1.0))
      out.push_back({field, "reflectance out of [0,1): gain diverges"});
  };
  check_mirror(rp.r_sr, "recycling.r_SR");
  check_mirror(rp.r_pr, "recycling.r_PR");
  if (!finite(rp.arm_length) || rp.arm_length <= 0.0)
    out.push_back({"geometry.L", "arm length must be positive"});
  if (!finite(rp.sr_distance) || rp.sr_distance < 0.0)
    out.push_back({"geometry.L_SR", "distance must be non-negative"});
  return out;
}

RecyclingGains derive_recycling(const RecyclingParams &rp) {
  throw_if_invalid(validate(rp));
  RecyclingGains gains;
  if (rp.r_pr)
    gains.g_pr = (1.0 + *rp.r_pr) / (1.0 - *rp.r_pr);
  if (rp.r_sr) {
    gains.g_sr = (1.0 + *rp.r_sr) / (1.0 - *rp.r_sr);
    gains.f_sr = constants::c_light * (1.0 - *rp.r_sr) /
                 (4.0 * constants::pi * (rp.sr_distance + rp.arm_length));
  }
  return gains;
}

double input_power(const OpticsParams &optics, const RecyclingGains &gains) {
  return optics.power_at_bs / gains.g_pr;
}

} // namespace msnoise
