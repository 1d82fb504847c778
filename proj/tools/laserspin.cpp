#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laserspin/scenario.hpp"
#include "laserspin/types.hpp"
#include "laserspin/validate.hpp"

namespace {

enum ExitCode { kOk = 0, kValidationFailure = 1, kConfigError = 2, kDomainError = 3, kIntegratorError = 4 };

std::vector<double> parse_values(const std::string& list) {
  std::vector<double> values;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw laserspin::ConfigError("values", "not a number: '" + item + "'");
    }
    if (used != item.size()) throw laserspin::ConfigError("values", "not a number: '" + item + "'");
    values.push_back(v);
  }
  return values;
}

int simulate(const std::string& config_path, const std::string& out_path) {
  const auto config = laserspin::load_config(config_path);
  const auto rows = laserspin::run_simulate(config);
  if (out_path.empty() || out_path == "-") {
    laserspin::write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw laserspin::ConfigError("out", "cannot open " + out_path);
    laserspin::write_csv(out, rows);
  }
  return kOk;
}

int sweep(const std::string& config_path, const std::string& param, const std::string& values,
          int jobs, const std::string& out_dir) {
  const auto config = laserspin::load_config(config_path);
  const auto entries = laserspin::run_sweep(config, param, parse_values(values), jobs, out_dir);
  std::size_t failed = 0;
  for (const auto& e : entries) {
    if (e.status != "ok") {
      ++failed;
      std::cerr << "point " << e.point << " (" << param << " = " << e.value << "): " << e.status
                << '\n';
    }
  }
  std::cerr << entries.size() - failed << "/" << entries.size() << " points written to " << out_dir
            << '\n';
  return kOk;
}

int validate(const std::string& filter, double perturb_mu) {
  const auto results = laserspin::run_validate({filter, perturb_mu});
  if (results.empty()) {
    std::cerr << "no oracle matches '" << filter << "'\n";
    return kValidationFailure;
  }
  laserspin::print_report(std::cout, results);
  return laserspin::all_passed(results) ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin entanglement of a bound state driven by a plane-wave laser"};
  app.require_subcommand(1);

  std::string config_path, out_path, param, values, out_dir = "sweep_out", filter;
  int jobs = 1;
  double perturb_mu = 0.0;

  auto* sim = app.add_subcommand("simulate", "Run one scenario and write CSV rows");
  sim->add_option("--config", config_path, "JSON scenario file")->required();
  sim->add_option("--out", out_path, "CSV output file (default: stdout)");

  auto* sw = app.add_subcommand("sweep", "Run a scenario over a grid of one parameter");
  sw->add_option("--config", config_path, "JSON scenario file")->required();
  sw->add_option("--param", param, "eta, epsilon, p, alpha, beta, g_coupling or delta")->required();
  sw->add_option("--values", values, "comma-separated grid")->required();
  sw->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sw->add_option("--out-dir", out_dir, "directory for point CSVs and manifest.json");

  auto* val = app.add_subcommand("validate", "Run the built-in oracle checks");
  val->add_option("--filter", filter, "only oracles whose name contains this string");
  val->add_option("--perturb-mu", perturb_mu)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*sim) return simulate(config_path, out_path);
    if (*sw) return sweep(config_path, param, values, jobs, out_dir);
    return validate(filter, perturb_mu);
  } catch (const laserspin::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const laserspin::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const laserspin::InvalidStateError& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kDomainError;
  } catch (const laserspin::IntegratorError& e) {
    std::cerr << "integrator failure: " << e.what() << '\n';
    return kIntegratorError;
  }
}
