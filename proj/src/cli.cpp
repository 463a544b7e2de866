#include "msnoise/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "msnoise/budget.hpp"
#include "msnoise/config.hpp"
#include "msnoise/oracle.hpp"
#include "msnoise/output.hpp"

namespace msnoise::cli {

namespace {

struct CommonFlags {
  std::string config_path;
  std::string sr;
  std::string damping = "both";
  std::string format = "csv";
  std::string out_path;
};

void add_config(CLI::App &cmd, CommonFlags &flags) {
  cmd.add_option("--config", flags.config_path,
                 "Config file (key = value); the Table I preset when omitted");
}

void add_sr(CLI::App &cmd, CommonFlags &flags) {
  cmd.add_option("--sr", flags.sr, "Signal recycling (default: on if recycling.r_SR is set)")
      ->check(CLI::IsMember({"on", "off"}));
}

void add_damping(CLI::App &cmd, CommonFlags &flags) {
  cmd.add_option("--damping", flags.damping, "Thermal damping model")
      ->check(CLI::IsMember({"viscous", "structural", "both"}));
}

void add_output(CLI::App &cmd, CommonFlags &flags, bool with_format) {
  if (with_format)
    cmd.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", flags.out_path, "Output file (default: standard output)");
}

InterferometerConfig load(const CommonFlags &flags) {
  return flags.config_path.empty() ? table1_preset() : load_config(flags.config_path);
}

bool sr_enabled(const CommonFlags &flags, const InterferometerConfig &cfg) {
  if (flags.sr.empty())
    return cfg.recycling.r_sr.has_value();
  return flags.sr == "on";
}

DampingSelection damping(const CommonFlags &flags) {
  if (flags.damping == "viscous")
    return DampingSelection::viscous;
  if (flags.damping == "structural")
    return DampingSelection::structural;
  return DampingSelection::both;
}

BudgetOptions options(const CommonFlags &flags, const InterferometerConfig &cfg) {
  return {.sr_enabled = sr_enabled(flags, cfg), .damping = damping(flags),
          .channels = ChannelSet::all()};
}

// Writes to --out when given, otherwise to `out`.
template <class Fn> void emit(const CommonFlags &flags, std::ostream &out, Fn &&write) {
  if (flags.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(flags.out_path);
  if (!file)
    throw std::runtime_error("cannot open '" + flags.out_path + "' for writing");
  write(file);
  if (!file)
    throw std::runtime_error("failed writing '" + flags.out_path + "'");
}

std::vector<double> parse_values(const std::string &list) {
  std::vector<double> values;
  if (list.empty())
    return values;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = std::min(list.find(',', start), list.size());
    const std::string_view item = std::string_view(list).substr(start, comma - start);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ValidationError("--values", "cannot parse '" + std::string(item) + "' as a number");
    values.push_back(v);
    start = comma + 1;
  }
  return values;
}

int report_validation(const ValidationError &e, std::ostream &err) {
  err << "error: invalid input\n";
  for (const auto &v : e.violations())
    err << "  " << v.field << ": " << v.message << '\n';
  return exit_usage;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Noise budget of a Michelson-Sagnac interferometer with a membrane oscillator",
               "msnoise"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  CommonFlags budget_flags;
  auto *budget_cmd = app.add_subcommand("budget", "Noise spectra over the configured grid");
  add_config(*budget_cmd, budget_flags);
  add_sr(*budget_cmd, budget_flags);
  add_damping(*budget_cmd, budget_flags);
  add_output(*budget_cmd, budget_flags, true);

  CommonFlags sweep_flags;
  std::string sweep_param;
  std::string sweep_values;
  double sweep_f_eval = 0.0;
  auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate every channel while varying one key");
  sweep_cmd->add_option("--param", sweep_param, "Config key to vary")->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->required();
  sweep_cmd->add_option("--f-eval", sweep_f_eval, "Evaluation frequency, Hz");
  add_config(*sweep_cmd, sweep_flags);
  add_sr(*sweep_cmd, sweep_flags);
  add_damping(*sweep_cmd, sweep_flags);
  add_output(*sweep_cmd, sweep_flags, true);

  CommonFlags power_flags;
  double power_ratio = 0.0;
  double power_f_eval = 0.0;
  auto *power_cmd =
      app.add_subcommand("solve-power", "Power giving a target rad/shot ratio");
  power_cmd->add_option("--ratio", power_ratio, "Target rad/shot ASD ratio")->required();
  power_cmd->add_option("--f-eval", power_f_eval, "Evaluation frequency, Hz");
  add_config(*power_cmd, power_flags);
  add_sr(*power_cmd, power_flags);
  add_output(*power_cmd, power_flags, false);

  CommonFlags thermal_flags;
  double thermal_t = 0.0;
  double thermal_q = 0.0;
  double thermal_margin = 0.0;
  double thermal_f_eval = 0.0;
  auto *thermal_cmd = app.add_subcommand(
      "solve-thermal", "Beam-splitter power giving a rad/thermal margin at T and Q");
  thermal_cmd->add_option("--T", thermal_t, "Membrane temperature, K")->required();
  thermal_cmd->add_option("--Q", thermal_q, "Membrane quality factor")->required();
  thermal_cmd->add_option("--margin", thermal_margin, "Target rad/thermal ASD ratio")->required();
  thermal_cmd->add_option("--f-eval", thermal_f_eval, "Evaluation frequency, Hz");
  add_config(*thermal_cmd, thermal_flags);
  add_sr(*thermal_cmd, thermal_flags);
  add_damping(*thermal_cmd, thermal_flags);
  add_output(*thermal_cmd, thermal_flags, false);

  std::size_t verify_draws = 100;
  auto *verify_cmd = app.add_subcommand("verify", "Run the quadrature-field oracle suite");
  verify_cmd->add_option("--draws", verify_draws, "Random parameter draws per check")
      ->check(CLI::PositiveNumber);

  std::string preset_name;
  auto *preset_cmd = app.add_subcommand("preset", "Print a bundled config");
  preset_cmd->add_option("name", preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember({"tableI"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  try {
    if (*budget_cmd) {
      const auto cfg = load(budget_flags);
      const auto opts = options(budget_flags, cfg);
      const auto spectrum = compute_budget(cfg.grid, cfg, opts);
      emit(budget_flags, out, [&](std::ostream &os) {
        if (budget_flags.format == "json")
          write_json(os, spectrum, cfg, opts);
        else
          write_csv(os, spectrum);
      });
    } else if (*sweep_cmd) {
      const auto cfg = load(sweep_flags);
      const auto values = parse_values(sweep_values);
      const auto rows = sweep(sweep_param, values, sweep_f_eval, cfg, options(sweep_flags, cfg));
      emit(sweep_flags, out, [&](std::ostream &os) {
        if (sweep_flags.format == "json")
          write_sweep_json(os, sweep_param, rows);
        else
          write_sweep_csv(os, sweep_param, rows);
      });
    } else if (*power_cmd) {
      const auto cfg = load(power_flags);
      const bool sr = sr_enabled(power_flags, cfg);
      const auto s = solve_power(power_ratio, power_f_eval, cfg, sr);
      if (s.beyond_sr_pole)
        err << "warning: f_eval is at or above the signal-recycling pole\n";
      emit(power_flags, out, [&](std::ostream &os) {
        os << "ratio = " << power_ratio << '\n'
           << "f_eval_hz = " << power_f_eval << '\n'
           << "sr = " << (sr ? "on" : "off") << '\n'
           << "effective_power_w = " << format_sci(s.effective_power) << '\n'
           << "power_at_bs_w = " << format_sci(s.power_at_bs) << '\n'
           << "input_power_w = " << format_sci(s.input_power) << '\n';
      });
    } else if (*thermal_cmd) {
      const auto cfg = load(thermal_flags);
      const bool sr = sr_enabled(thermal_flags, cfg);
      const auto model = total_damping_model(damping(thermal_flags));
      const auto s = solve_thermal_power(thermal_t, thermal_q, thermal_margin, thermal_f_eval,
                                         cfg, sr, model);
      BudgetOptions opts = options(thermal_flags, cfg);
      opts.channels = ChannelSet::all();
      const Channel thermal_channel =
          model == DampingModel::viscous ? Channel::thermal_viscous : Channel::thermal_structural;
      std::optional<double> config_margin;
      if (cfg.membrane.temperature > 0.0)
        config_margin = ratio_at(thermal_f_eval, Channel::rad, thermal_channel, cfg, opts);
      emit(thermal_flags, out, [&](std::ostream &os) {
        os << "temperature_k = " << thermal_t << '\n'
           << "q = " << thermal_q << '\n'
           << "margin = " << thermal_margin << '\n'
           << "f_eval_hz = " << thermal_f_eval << '\n'
           << "damping = " << to_string(model) << '\n'
           << "sr = " << (sr ? "on" : "off") << '\n'
           << "power_at_bs_w = " << format_sci(s.power_at_bs) << '\n'
           << "effective_power_w = " << format_sci(s.effective_power) << '\n'
           << "thermal_scale = " << format_sci(s.thermal_scale) << '\n';
        if (config_margin)
          os << "config_margin = " << format_sci(*config_margin) << '\n';
      });
    } else if (*verify_cmd) {
      const auto report = oracle::run_verification(verify_draws);
      double worst = 0.0;
      for (const auto &c : report.checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << " samples=" << c.samples
            << " max_rel_error=" << format_sci(c.max_error)
            << " tolerance=" << format_sci(c.tolerance) << '\n';
        worst = std::max(worst, c.max_error);
      }
      out << "max relative error = " << format_sci(worst) << '\n';
      if (!report.passed()) {
        err << "verify: oracle mismatch\n";
        return exit_internal;
      }
    } else if (*preset_cmd) {
      out << "# Michelson-Sagnac design example (SI units)\n" << format_config(table1_preset());
    }
  } catch (const ValidationError &e) {
    return report_validation(e, err);
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_ok;
}

} // namespace msnoise::cli
