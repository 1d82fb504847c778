#pragma once

// Configuration-driven runs behind the command-line tool.
//
// Units at this boundary: omega_L is the unit of frequency, so g_coupling is
// entered in units of omega_L, t_end in laser periods 2 pi / omega_L, and the
// emitted time column is in units of 1 / omega_L.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "laserspin/evolution.hpp"
#include "laserspin/spinfield.hpp"
#include "laserspin/trajectory.hpp"

namespace laserspin {

/// Malformed or unknown configuration content; `key` names the offender.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct WernerInit {
  double p;
};
struct ProductInit {
  double alpha;
  double beta;
};
struct ExplicitInit {
  Mat4 matrix;
};
using InitialState = std::variant<WernerInit, ProductInit, ExplicitInit>;

struct ScenarioConfig {
  static constexpr int kSchema = 1;

  LaserParams laser;
  BoundStateParams bound;
  double gamma_z = 1.0;
  InitialState initial_state = WernerInit{0.0};
  double t_end = 1.0;  ///< laser periods
  long samples = 101;
  double tol = 1e-10;

  /// Throws ConfigError on violated structural invariants (samples, tol, t_end).
  void validate() const;
};

ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& file);
nlohmann::json to_json(const ScenarioConfig& config);

struct ResultRow {
  double t;
  double concurrence_numeric;
  std::optional<double> concurrence_analytic;
  double purity;
  double trace_error;
  double unitarity_error;
};

DensityMatrix initial_density_matrix(const InitialState& init);

/// Throws DomainError / InvalidStateError for physics-domain problems and
/// IntegratorError when the propagation fails or an invariant is breached.
std::vector<ResultRow> run_simulate(const ScenarioConfig& config);

inline constexpr const char* kCsvHeader =
    "t,concurrence_numeric,concurrence_analytic,purity,trace_error,unitarity_error";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

/// Parameters a sweep may vary.
inline constexpr const char* kSweepParameters[] = {"eta", "epsilon", "p", "alpha",
                                                    "beta", "g_coupling", "delta"};

/// Copy of `base` with one parameter replaced. "delta" adjusts g_p.
ScenarioConfig with_parameter(const ScenarioConfig& base, const std::string& name, double value);

struct ManifestEntry {
  std::size_t point;
  double value;
  std::optional<std::string> file;
  std::string status;  ///< "ok" or "error: ..."
};

/// One CSV per grid point in out_dir plus manifest.json. Failed points are
/// recorded in the manifest and do not abort the sweep.
std::vector<ManifestEntry> run_sweep(const ScenarioConfig& base, const std::string& parameter,
                                     const std::vector<double>& values, int jobs,
                                     const std::filesystem::path& out_dir);

nlohmann::json manifest_json(const std::string& parameter, const std::vector<ManifestEntry>& entries);

}  // namespace laserspin
