#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "msnoise/budget.hpp"
#include "msnoise/config.hpp"
#include "msnoise/spectrum.hpp"

namespace msnoise {

/// `frequency_hz` followed by each channel, values as %.8e (9 significant digits).
void write_csv(std::ostream &os, const NoiseSpectrum &spectrum);

/// Same field names as the CSV plus a `params` block echoing the setup.
void write_json(std::ostream &os, const NoiseSpectrum &spectrum, const InterferometerConfig &cfg,
                const BudgetOptions &options);

void write_sweep_csv(std::ostream &os, std::string_view param, std::span<const SweepRow> rows);
void write_sweep_json(std::ostream &os, std::string_view param, std::span<const SweepRow> rows);

/// %.8e formatting shared by the writers.
std::string format_sci(double value);

} // namespace msnoise
