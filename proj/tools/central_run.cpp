// Command-line runner for the validation experiments.
//
//   central_run --experiment advection --n 40,80,160 --out results/
//   central_run --config sod.cfg --p-exponent 0.6
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "central/harness/config.hpp"
#include "central/harness/experiments.hpp"

namespace h = central::harness;

int main(int argc, char** argv) {
  CLI::App app{"Third-order semi-discrete central scheme: experiment runner"};

  std::string config_path;
  std::string experiment;
  std::vector<int> resolutions;
  std::optional<double> t_end, cfl, p_exponent, nu;
  std::optional<std::string> out_dir;
  bool list = false;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--experiment", experiment, "experiment name (see --list)");
  app.add_option("--n", resolutions, "resolution(s), comma separated or repeated")->delimiter(',');
  app.add_option("--t-end", t_end, "final time");
  app.add_option("--cfl", cfl, "hyperbolic CFL number");
  app.add_option("--p-exponent", p_exponent, "CWENO weight exponent p");
  app.add_option("--nu", nu, "viscosity (incompressible runs)");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--list", list, "list experiment names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    for (const auto& [e, name] : h::kExperimentNames) std::cout << name << '\n';
    return 0;
  }

  try {
    h::Settings settings;
    if (!config_path.empty()) settings = h::read_settings_file(config_path);
    if (!experiment.empty()) settings["experiment"] = experiment;
    if (!settings.contains("experiment")) throw central::ConfigError("no experiment given (--experiment or config)");

    h::ExperimentConfig config = h::apply_settings({}, settings);
    if (!resolutions.empty()) config.resolutions = resolutions;
    if (t_end) config.t_end = *t_end;
    if (cfl) config.options.cfl = *cfl;
    if (p_exponent) config.options.cweno.p_exponent = *p_exponent;
    if (nu) config.nu = *nu;
    if (out_dir) config.output_dir = *out_dir;
    if (config.experiment == h::Experiment::DoubleShearLayer && t_end) {
      std::erase_if(config.output_times, [&](double t) { return t > *t_end; });
    }

    const h::RunReport report = h::run_experiment(config);
    std::cout << h::to_string(config.experiment) << '\n';
    for (const auto& line : report.summary) std::cout << "  " << line << '\n';
    for (const auto& f : report.files) std::cout << "  wrote " << f.string() << '\n';
    return 0;
  } catch (const central::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const central::OutOfSmoothRegime& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const central::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
