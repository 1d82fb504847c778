#include "laserspin/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "laserspin/entanglement.hpp"
#include "laserspin/kernels.hpp"

namespace laserspin {
namespace {

using nlohmann::json;

// Reads one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_, "expected a JSON object");
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  const json& child(const std::string& key) {
    if (!node_.contains(key)) throw ConfigError(qualified(key), "missing required key");
    used_.insert(key);
    return node_.at(key);
  }

  double number(const std::string& key) {
    const json& v = child(key);
    if (!v.is_number()) throw ConfigError(qualified(key), "expected a number");
    return v.get<double>();
  }

  double number_or(const std::string& key, double fallback) {
    return has(key) ? number(key) : fallback;
  }

  std::string string(const std::string& key) {
    const json& v = child(key);
    if (!v.is_string()) throw ConfigError(qualified(key), "expected a string");
    return v.get<std::string>();
  }

  // Reports unknown keys before any missing one, so a typo is named directly.
  void only(std::initializer_list<std::string_view> allowed) const {
    for (const auto& item : node_.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
        throw ConfigError(qualified(item.key()), "unknown key");
      }
    }
  }

  void finish() const {
    for (const auto& item : node_.items()) {
      if (!used_.count(item.key())) throw ConfigError(qualified(item.key()), "unknown key");
    }
  }

  std::string qualified(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> used_;
};

Mat4 read_matrix(const json& real, const json* imag, const std::string& path) {
  Mat4 m = Mat4::Zero();
  const auto fill = [&](const json& rows, bool imaginary, const std::string& where) {
    if (!rows.is_array() || rows.size() != 4) throw ConfigError(where, "expected 4 rows");
    for (int r = 0; r < 4; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != 4) throw ConfigError(where, "expected 4 columns");
      for (int c = 0; c < 4; ++c) {
        if (!row[c].is_number()) throw ConfigError(where, "expected numbers");
        const double v = row[c].get<double>();
        m(r, c) += imaginary ? Complex(0.0, v) : Complex(v, 0.0);
      }
    }
  };
  fill(real, false, path + ".real");
  if (imag) fill(*imag, true, path + ".imag");
  return m;
}

CouplingConvention parse_convention(const std::string& name, const std::string& path) {
  if (name == "pauli") return CouplingConvention::pauli;
  if (name == "spin_operator") return CouplingConvention::spin_operator;
  throw ConfigError(path, "expected \"pauli\" or \"spin_operator\"");
}

const char* convention_name(CouplingConvention c) {
  return c == CouplingConvention::pauli ? "pauli" : "spin_operator";
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (samples < 2) throw ConfigError("samples", "must be >= 2");
  if (!(tol > 0.0 && tol < 1e-4)) throw ConfigError("tol", "must lie in (0, 1e-4)");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end", "must be > 0");
}

ScenarioConfig parse_config(const json& doc) {
  ObjectReader top(doc, "");
  top.only({"schema", "laser", "gamma_z", "bound", "initial_state", "t_end", "samples", "tol"});
  const json& schema = top.child("schema");
  if (!schema.is_number_integer() || schema.get<int>() != ScenarioConfig::kSchema) {
    throw ConfigError("schema", "unsupported schema version (expected 1)");
  }

  ScenarioConfig cfg;
  {
    ObjectReader laser(top.child("laser"), "laser");
    laser.only({"eta", "epsilon"});
    cfg.laser.eta = laser.number("eta");
    cfg.laser.epsilon = laser.number("epsilon");
    cfg.laser.omega_L = 1.0;
    laser.finish();
  }
  cfg.gamma_z = top.number_or("gamma_z", 1.0);
  {
    ObjectReader b(top.child("bound"), "bound");
    b.only({"mass_n", "mass_p", "charge_n", "charge_p", "g_n", "g_p", "q_B", "g_coupling",
            "coupling_convention"});
    cfg.bound.mass_n = b.number("mass_n");
    cfg.bound.mass_p = b.number("mass_p");
    cfg.bound.charge_n = b.number("charge_n");
    cfg.bound.charge_p = b.number("charge_p");
    cfg.bound.g_n = b.number("g_n");
    cfg.bound.g_p = b.number("g_p");
    cfg.bound.q_B = b.number("q_B");
    cfg.bound.g_coupling = b.number("g_coupling");
    if (b.has("coupling_convention")) {
      cfg.bound.convention =
          parse_convention(b.string("coupling_convention"), "bound.coupling_convention");
    }
    b.finish();
  }
  {
    ObjectReader s(top.child("initial_state"), "initial_state");
    const std::string kind = s.string("kind");
    if (kind == "werner") {
      s.only({"kind", "p"});
      cfg.initial_state = WernerInit{s.number("p")};
    } else if (kind == "product") {
      s.only({"kind", "alpha", "beta"});
      cfg.initial_state = ProductInit{s.number("alpha"), s.number("beta")};
    } else if (kind == "explicit") {
      s.only({"kind", "real", "imag"});
      const json& real = s.child("real");
      const json* imag = s.has("imag") ? &s.child("imag") : nullptr;
      cfg.initial_state = ExplicitInit{read_matrix(real, imag, "initial_state")};
    } else {
      throw ConfigError("initial_state.kind", "expected werner, product or explicit");
    }
    s.finish();
  }
  cfg.t_end = top.number("t_end");
  {
    const json& n = top.child("samples");
    if (!n.is_number_integer()) throw ConfigError("samples", "expected an integer");
    cfg.samples = n.get<long>();
  }
  cfg.tol = top.number_or("tol", 1e-10);
  top.finish();
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("", "cannot open config file " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

json to_json(const ScenarioConfig& config) {
  json doc;
  doc["schema"] = ScenarioConfig::kSchema;
  doc["laser"] = {{"eta", config.laser.eta}, {"epsilon", config.laser.epsilon}};
  doc["gamma_z"] = config.gamma_z;
  const auto& b = config.bound;
  doc["bound"] = {{"mass_n", b.mass_n},
                  {"mass_p", b.mass_p},
                  {"charge_n", b.charge_n},
                  {"charge_p", b.charge_p},
                  {"g_n", b.g_n},
                  {"g_p", b.g_p},
                  {"q_B", b.q_B},
                  {"g_coupling", b.g_coupling},
                  {"coupling_convention", convention_name(b.convention)}};
  std::visit(
      [&](const auto& init) {
        using T = std::decay_t<decltype(init)>;
        if constexpr (std::is_same_v<T, WernerInit>) {
          doc["initial_state"] = {{"kind", "werner"}, {"p", init.p}};
        } else if constexpr (std::is_same_v<T, ProductInit>) {
          doc["initial_state"] = {{"kind", "product"}, {"alpha", init.alpha}, {"beta", init.beta}};
        } else {
          json real = json::array();
          json imag = json::array();
          for (int r = 0; r < 4; ++r) {
            json rr = json::array();
            json ii = json::array();
            for (int c = 0; c < 4; ++c) {
              rr.push_back(init.matrix(r, c).real());
              ii.push_back(init.matrix(r, c).imag());
            }
            real.push_back(rr);
            imag.push_back(ii);
          }
          doc["initial_state"] = {{"kind", "explicit"}, {"real", real}, {"imag", imag}};
        }
      },
      config.initial_state);
  doc["t_end"] = config.t_end;
  doc["samples"] = config.samples;
  doc["tol"] = config.tol;
  return doc;
}

DensityMatrix initial_density_matrix(const InitialState& init) {
  return std::visit(
      [](const auto& s) -> DensityMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WernerInit>) {
          return werner_state(s.p);
        } else if constexpr (std::is_same_v<T, ProductInit>) {
          return product_state(s.alpha, s.beta);
        } else {
          return DensityMatrix(s.matrix);
        }
      },
      init);
}

std::vector<ResultRow> run_simulate(const ScenarioConfig& config) {
  config.validate();
  config.bound.validate();
  const KinematicParams kin = modulus_from_params(config.laser, config.gamma_z);
  const DensityMatrix rho0 = initial_density_matrix(config.initial_state);
  const SpinHamiltonianSource source(config.laser, kin, config.bound);

  const double period = 2.0 * kPi / config.laser.omega_L;
  const auto grid = uniform_grid(config.t_end * period, static_cast<std::size_t>(config.samples));

  std::vector<EvolutionSample> states;
  try {
    states = evolve(rho0, source, grid, config.tol);
  } catch (const InvalidStateError& e) {
    throw IntegratorError(std::string("evolved state left the density-matrix set: ") + e.what());
  }

  std::vector<ResultRow> rows;
  rows.reserve(states.size());
  for (const auto& s : states) {
    ResultRow row{s.t, wootters_concurrence(s.rho), std::nullopt, s.rho.purity(),
                  s.rho.trace_error(), s.unitarity_error};
    if (const auto* w = std::get_if<WernerInit>(&config.initial_state)) {
      row.concurrence_analytic = concurrence_werner_analytic(w->p);
    } else if (const auto* p = std::get_if<ProductInit>(&config.initial_state)) {
      if (config.laser.epsilon == 0.0) {
        row.concurrence_analytic = concurrence_product_analytic(
            s.t, p->alpha, p->beta, config.laser.eta, config.bound.coupling_strength(),
            config.bound.delta(), config.laser.omega_L);
      }
    }
    if (!(row.concurrence_numeric >= 0.0 && row.concurrence_numeric <= 1.0)) {
      throw IntegratorError("concurrence left [0, 1] at t = " + format_number(s.t));
    }
    if (!(row.trace_error < 10.0 * config.tol)) {
      throw IntegratorError("trace drifted beyond 10 tol at t = " + format_number(s.t));
    }
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.t) << ',' << format_number(r.concurrence_numeric) << ','
        << (r.concurrence_analytic ? format_number(*r.concurrence_analytic) : std::string()) << ','
        << format_number(r.purity) << ',' << format_number(r.trace_error) << ','
        << format_number(r.unitarity_error) << '\n';
  }
}

ScenarioConfig with_parameter(const ScenarioConfig& base, const std::string& name, double value) {
  ScenarioConfig cfg = base;
  if (name == "eta") {
    cfg.laser.eta = value;
  } else if (name == "epsilon") {
    cfg.laser.epsilon = value;
  } else if (name == "g_coupling") {
    cfg.bound.g_coupling = value;
  } else if (name == "delta") {
    cfg.bound.set_delta(value);
  } else if (name == "p") {
    if (!std::holds_alternative<WernerInit>(cfg.initial_state)) {
      throw ConfigError("p", "sweeping p needs a werner initial state");
    }
    std::get<WernerInit>(cfg.initial_state).p = value;
  } else if (name == "alpha" || name == "beta") {
    auto* prod = std::get_if<ProductInit>(&cfg.initial_state);
    if (!prod) throw ConfigError(name, "sweeping " + name + " needs a product initial state");
    (name == "alpha" ? prod->alpha : prod->beta) = value;
  } else {
    throw ConfigError(name, "not a sweepable parameter");
  }
  return cfg;
}

json manifest_json(const std::string& parameter, const std::vector<ManifestEntry>& entries) {
  json points = json::array();
  for (const auto& e : entries) {
    points.push_back({{"point", e.point},
                      {"value", e.value},
                      {"file", e.file ? json(*e.file) : json(nullptr)},
                      {"status", e.status}});
  }
  return {{"parameter", parameter}, {"points", points}};
}

std::vector<ManifestEntry> run_sweep(const ScenarioConfig& base, const std::string& parameter,
                                     const std::vector<double>& values, int jobs,
                                     const std::filesystem::path& out_dir) {
  if (values.empty()) throw ConfigError("values", "sweep grid is empty");
  bool known = false;
  for (const char* p : kSweepParameters) known = known || parameter == p;
  if (!known) throw ConfigError(parameter, "not a sweepable parameter");
  // Structural problems (wrong initial-state kind) fail the whole sweep up front.
  (void)with_parameter(base, parameter, values.front());

  std::filesystem::create_directories(out_dir);
  std::vector<ManifestEntry> entries(values.size());
  parallel_for(values.size(), jobs, [&](std::size_t i) {
    char name[32];
    std::snprintf(name, sizeof name, "point_%04zu.csv", i);
    ManifestEntry& entry = entries[i];
    entry.point = i;
    entry.value = values[i];
    try {
      const auto rows = run_simulate(with_parameter(base, parameter, values[i]));
      std::ofstream out(out_dir / name, std::ios::binary);
      write_csv(out, rows);
      if (!out) throw std::runtime_error("cannot write " + (out_dir / name).string());
      entry.file = name;
      entry.status = "ok";
    } catch (const std::exception& e) {
      entry.status = std::string("error: ") + e.what();
    }
  });

  std::ofstream manifest(out_dir / "manifest.json", std::ios::binary);
  manifest << manifest_json(parameter, entries).dump(2) << '\n';
  return entries;
}

}  // namespace laserspin
