#include "mollow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mollow/check.hpp"
#include "mollow/equation_map.hpp"
#include "mollow/model.hpp"
#include "mollow/triplet.hpp"
#include "mollow/version.hpp"

namespace mollow::cli {

namespace {

const std::map<std::string, Component> kComponentNames = {
    {"kerr-z", Component::KerrZ},
    {"parametric-z", Component::ParametricZ},
    {"transverse", Component::Transverse},
};

const std::map<std::string, Method> kMethodNames = {
    {"residue", Method::Residue},        {"quadrature", Method::Quadrature},
    {"oracle", Method::Oracle},          {"weak", Method::Weak},
    {"sat-center", Method::SatCenter},   {"sat-sideband", Method::SatSideband},
    {"sat-transverse", Method::SatTransverse},
};

const std::map<std::string, OutputFormat> kFormatNames = {
    {"csv", OutputFormat::Csv},
    {"json", OutputFormat::Json},
};

// flags a sweep config file may set, keyed by their file spelling
// (flag name with hyphens replaced by underscores)
const std::vector<std::string> kConfigKeys = {
    "component", "gamma",   "delta",  "rabi",   "saturation", "omega_min", "omega_max",
    "points",    "method",  "scale",  "density_lambda3", "epsilon", "tolerance",
    "format",    "output",
};

std::string flag_for_key(const std::string& key) {
  std::string flag = "--" + key;
  std::replace(flag.begin(), flag.end(), '_', '-');
  return flag;
}

std::string json_value_to_arg(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw UsageError("config file: unsupported value type");
}

/// Expand "--config FILE" into the file's flags, placed before the explicit
/// ones so that the explicit flags win under a take-last policy.
std::vector<std::string> merge_config_file(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config expects a file path");
      path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }
  if (path.empty()) return rest;

  std::ifstream in(path);
  if (!in) throw UsageError("config file not readable: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw UsageError("config file must be a JSON object");

  std::vector<std::string> merged;
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
      throw UsageError("config file: unknown key \"" + key + "\"");
    merged.push_back(flag_for_key(key));
    merged.push_back(json_value_to_arg(value));
  }
  merged.insert(merged.end(), rest.begin(), rest.end());
  return merged;
}

template <typename T>
T lookup(const std::map<std::string, T>& table, const std::string& name,
         const char* what) {
  const auto it = table.find(name);
  if (it == table.end()) throw UsageError(std::string("unknown ") + what + ": " + name);
  return it->second;
}

double arg_of(Complex v) {
  double a = std::arg(v);
  if (a <= -M_PI) a = M_PI;  // emit arg in (-pi, pi]
  return a;
}

struct SweepFlags {
  std::string component;
  double gamma = 1.0;
  double delta = 0.0;
  double rabi = 0.0;
  double saturation = 0.0;
  bool has_rabi = false;
  bool has_saturation = false;
  double omega_min = 0.0, omega_max = 0.0;
  int points = 0;
  std::string method = "residue";
  double scale = 1.0;
  double density_lambda3 = 0.0;
  bool has_density = false;
  bool has_scale = false;
  double epsilon = 0.0;
  bool has_epsilon = false;
  double tolerance = 1e-8;
  std::string format = "csv";
  std::string output = "-";
};

void add_sweep_options(CLI::App& app, SweepFlags& f) {
  app.add_option("--component", f.component, "kerr-z | parametric-z | transverse")->required();
  app.add_option("--gamma", f.gamma, "decay rate (frequency unit), default 1");
  app.add_option("--delta", f.delta, "control-field detuning");
  auto* rabi = app.add_option("--rabi", f.rabi, "Rabi frequency (exclusive with --saturation)");
  auto* sat = app.add_option("--saturation", f.saturation, "saturation parameter s");
  app.add_option("--omega-min", f.omega_min, "probe detuning grid start")->required();
  app.add_option("--omega-max", f.omega_max, "probe detuning grid end")->required();
  app.add_option("--points", f.points, "grid point count (>= 2)")->required();
  app.add_option("--method", f.method,
                 "residue | quadrature | oracle | weak | sat-center | sat-sideband | "
                 "sat-transverse");
  auto* scale = app.add_option("--scale", f.scale, "susceptibility prefactor, default 1");
  auto* dens = app.add_option("--density-lambda3", f.density_lambda3,
                              "set scale from the dimensionless density n0*lambdabar0^3");
  app.add_option("--epsilon", f.epsilon, "dense-medium permittivity (>= 1)");
  app.add_option("--tolerance", f.tolerance, "quadrature tolerance, default 1e-8");
  app.add_option("--format", f.format, "csv | json");
  app.add_option("--output", f.output, "output path, '-' for stdout");
  // explicit flags are appended after config-file flags, so take-last makes
  // them win
  for (auto* opt : app.get_options())
    if (!opt->get_positional()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  (void)rabi;
  (void)sat;
  (void)scale;
  (void)dens;
}

RunConfig resolve_sweep_flags(const CLI::App& app, const SweepFlags& f) {
  RunConfig cfg;
  cfg.component = lookup(kComponentNames, f.component, "component");
  cfg.method = lookup(kMethodNames, f.method, "method");
  cfg.format = lookup(kFormatNames, f.format, "format");
  cfg.gamma = f.gamma;
  cfg.delta = f.delta;
  cfg.omega_min = f.omega_min;
  cfg.omega_max = f.omega_max;
  cfg.points = f.points;
  cfg.tolerance = f.tolerance;
  cfg.output = f.output;

  if (!(cfg.gamma > 0.0)) throw UsageError("--gamma must be positive");
  if (cfg.points < 2) throw UsageError("--points must be >= 2");
  if (!(cfg.omega_min < cfg.omega_max)) throw UsageError("--omega-min must be < --omega-max");
  if (!(cfg.tolerance > 0.0) || cfg.tolerance > 1e-3)
    throw UsageError("--tolerance must lie in (0, 1e-3]");

  const bool has_rabi = app.count("--rabi") > 0;
  const bool has_sat = app.count("--saturation") > 0;
  if (has_rabi == has_sat)
    throw UsageError("exactly one of --rabi / --saturation must be given");
  if (app.count("--scale") > 0 && app.count("--density-lambda3") > 0)
    throw UsageError("--scale and --density-lambda3 are mutually exclusive");
  if (app.count("--epsilon") > 0) {
    if (!(f.epsilon >= 1.0)) throw UsageError("--epsilon must be >= 1 (transparency domain)");
    cfg.epsilon = f.epsilon;
  }
  cfg.scale = app.count("--density-lambda3") > 0
                  ? DensityScale::from_density_lambda3(f.density_lambda3).scale
                  : f.scale;
  if (!(cfg.scale >= 0.0)) throw UsageError("--scale must be non-negative");

  const double ge = cfg.epsilon ? std::sqrt(*cfg.epsilon) * cfg.gamma : cfg.gamma;
  if (has_rabi) {
    if (!(f.rabi >= 0.0)) throw UsageError("--rabi must be non-negative");
    cfg.rabi = f.rabi;
    cfg.saturation = saturation(DriveParams(ge, cfg.delta, cfg.rabi));
  } else {
    if (!(f.saturation >= 0.0)) throw UsageError("--saturation must be non-negative");
    cfg.saturation = f.saturation;
    cfg.rabi = rabi_from_saturation(cfg.saturation, ge, cfg.delta);
  }

  const bool z_only = cfg.method == Method::SatCenter || cfg.method == Method::SatSideband;
  if (z_only && cfg.component == Component::Transverse)
    throw UsageError("--method " + std::string(method_name(cfg.method)) +
                     " applies to the z components only");
  if (cfg.method == Method::SatTransverse && cfg.component != Component::Transverse)
    throw UsageError("--method sat-transverse applies to the transverse component only");
  return cfg;
}

std::vector<double> build_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * double(i) / double(n - 1);
  return g;
}

/// Evaluate a resolved config: normalize to gamma = 1 internally, sweep, and
/// report omega back in the caller's frequency unit.
SweepResult evaluate(const RunConfig& cfg) {
  const double ge = cfg.gamma_effective();
  const DriveParams p(1.0, cfg.delta / ge, cfg.rabi / ge);
  std::vector<double> grid = build_grid(cfg.omega_min / ge, cfg.omega_max / ge, cfg.points);
  SweepResult r = sweep(cfg.component, p, grid, cfg.method, DensityScale(cfg.scale),
                        cfg.tolerance);
  for (auto& s : r.samples) s.omega *= ge;
  return r;
}

void write_output(const RunConfig& cfg, const SweepResult& r, std::ostream& out) {
  const auto emit = [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Csv)
      write_csv(os, r);
    else
      write_json(os, r, cfg);
  };
  if (cfg.output == "-") {
    emit(out);
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.output);
    emit(f);
  }
}

// ---- subcommand drivers ----

int cmd_sweep(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg = parse_config(args);
  try {
    const SweepResult r = evaluate(cfg);
    write_output(cfg, r, out);
  } catch (const std::exception& e) {
    err << "sweep: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_figure(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"figure preset"};
  app.allow_extras(false);
  std::string preset;
  std::vector<double> s_list{0.1, 1.0, 10.0, 100.0};
  int points = 801;
  double omega_min = -8.0, omega_max = 8.0, gamma = 1.0, scale = 1.0;
  std::string outdir = ".";
  app.add_option("preset", preset, "fig3 | fig4 | fig5")->required();
  app.add_option("--s-list", s_list, "saturation parameters, one output file each");
  app.add_option("--points", points, "grid points, default 801");
  app.add_option("--omega-min", omega_min, "grid start in units of gamma, default -8");
  app.add_option("--omega-max", omega_max, "grid end in units of gamma, default 8");
  app.add_option("--gamma", gamma, "decay rate, default 1");
  app.add_option("--scale", scale, "susceptibility prefactor, default 1");
  app.add_option("--output-dir", outdir, "directory for the emitted files");

  std::vector<const char*> argv{"figure"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "figure: " << e.what() << "\n";
    return kUsage;
  }

  Component component;
  if (preset == "fig3") component = Component::KerrZ;
  else if (preset == "fig4") component = Component::Transverse;
  else if (preset == "fig5") component = Component::ParametricZ;
  else {
    err << "figure: unknown preset " << preset << "\n";
    return kUsage;
  }
  if (points < 2 || !(omega_min < omega_max) || !(gamma > 0.0)) {
    err << "figure: bad grid or gamma\n";
    return kUsage;
  }

  try {
    nlohmann::ordered_json meta;
    meta["preset"] = preset;
    meta["component"] = component_name(component);
    meta["delta"] = 0.0;
    meta["s_list"] = s_list;
    meta["s_list_note"] =
        "default saturation values are a preset choice; override with --s-list";
    meta["gamma"] = gamma;
    meta["scale"] = scale;
    meta["points"] = points;
    meta["omega_min_over_gamma"] = omega_min;
    meta["omega_max_over_gamma"] = omega_max;
    meta["version"] = kVersion;
    std::vector<std::string> files;

    for (double s : s_list) {
      RunConfig cfg;
      cfg.component = component;
      cfg.gamma = gamma;
      cfg.delta = 0.0;
      cfg.saturation = s;
      cfg.rabi = rabi_from_saturation(s, gamma, 0.0);
      cfg.omega_min = omega_min * gamma;
      cfg.omega_max = omega_max * gamma;
      cfg.points = points;
      cfg.method = Method::Residue;
      cfg.scale = scale;
      cfg.format = OutputFormat::Csv;
      const SweepResult r = evaluate(cfg);
      const std::string path = outdir + "/" + preset + "_s" + format_double(s) + ".csv";
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + path);
      write_csv(f, r);
      files.push_back(path);
    }
    meta["files"] = files;
    std::ofstream mf(outdir + "/" + preset + "_meta.json", std::ios::binary);
    if (!mf) throw std::runtime_error("cannot open preset metadata file");
    mf << meta.dump(2) << "\n";
    out << "wrote " << files.size() << " files for " << preset << "\n";
  } catch (const std::exception& e) {
    err << "figure: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_roots(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"triplet roots"};
  double gamma = 1.0, delta = 0.0, rabi = 0.0, sat = 0.0;
  std::string format = "text";
  app.add_option("--gamma", gamma);
  app.add_option("--delta", delta);
  auto* r_opt = app.add_option("--rabi", rabi);
  auto* s_opt = app.add_option("--saturation", sat);
  app.add_option("--format", format, "text | json");

  std::vector<const char*> argv{"roots"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "roots: " << e.what() << "\n";
    return kUsage;
  }
  if (!(gamma > 0.0)) {
    err << "roots: --gamma must be positive\n";
    return kUsage;
  }
  if ((r_opt->count() > 0) == (s_opt->count() > 0)) {
    err << "roots: exactly one of --rabi / --saturation must be given\n";
    return kUsage;
  }
  if (s_opt->count() > 0) rabi = rabi_from_saturation(sat, gamma, delta);

  try {
    const DriveParams p(1.0, delta / gamma, rabi / gamma);
    const TripletRoots t = triplet_roots(p);
    const double s_val = saturation(p);
    const bool with_asym = s_val > 10.0;
    const TripletRoots asym = triplet_roots_saturation(p);
    const double ref = std::max(p.rabi, 1.0);

    if (format == "json") {
      nlohmann::ordered_json j;
      j["gamma"] = gamma;
      j["delta"] = delta;
      j["rabi"] = rabi;
      j["saturation"] = s_val;
      j["regime"] = t.regime == Regime::Triplet ? "triplet" : "sub-threshold";
      j["roots"] = nlohmann::ordered_json::array();
      for (int k = 0; k < 3; ++k) {
        nlohmann::ordered_json e;
        e["re"] = t.lambda[k].real() * gamma;
        e["im"] = t.lambda[k].imag() * gamma;
        if (with_asym) {
          e["asym_re"] = asym.lambda[k].real() * gamma;
          e["asym_im"] = asym.lambda[k].imag() * gamma;
          e["asym_deviation"] = std::abs(t.lambda[k] - asym.lambda[k]) / ref;
        }
        j["roots"].push_back(e);
      }
      out << j.dump(2) << "\n";
    } else {
      out << "regime: " << (t.regime == Regime::Triplet ? "triplet" : "sub-threshold") << "\n";
      for (int k = 0; k < 3; ++k) {
        out << "lambda" << (k + 1) << " = " << format_double(t.lambda[k].real() * gamma)
            << (t.lambda[k].imag() < 0 ? " - " : " + ")
            << format_double(std::abs(t.lambda[k].imag()) * gamma) << "i";
        if (with_asym)
          out << "   asymptote deviation " << format_double(std::abs(t.lambda[k] - asym.lambda[k]) / ref);
        out << "\n";
      }
    }
  } catch (const std::exception& e) {
    err << "roots: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_check(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"self-check"};
  CheckOptions opt;
  std::string output = "-";
  app.add_option("--seed", opt.seed);
  app.add_option("--triple-points", opt.triple_points);
  app.add_option("--det-points", opt.det_points);
  app.add_option("--output", output, "report path, '-' for stdout");

  std::vector<const char*> argv{"check"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "check: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const CheckReport report = run_properties(opt);
    const std::string text = report_to_json(report);
    if (output == "-") {
      out << text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + output);
      f << text;
    }
    return report.all_pass ? kOk : kFailure;
  } catch (const std::exception& e) {
    err << "check: " << e.what() << "\n";
    return kFailure;
  }
}

int cmd_docs(std::ostream& out) {
  out << render_equation_map();
  return kOk;
}

}  // namespace

double RunConfig::gamma_effective() const {
  return epsilon ? std::sqrt(*epsilon) * gamma : gamma;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

RunConfig parse_config(const std::vector<std::string>& args) {
  const std::vector<std::string> merged = merge_config_file(args);
  CLI::App app{"sweep"};
  SweepFlags flags;
  add_sweep_options(app, flags);
  std::vector<const char*> argv{"sweep"};
  for (const auto& a : merged) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return resolve_sweep_flags(app, flags);
}

void write_csv(std::ostream& os, const SweepResult& result) {
  os << "omega,re,im,abs,arg\n";
  for (const auto& s : result.samples) {
    os << format_double(s.omega) << ',' << format_double(s.value.real()) << ','
       << format_double(s.value.imag()) << ',' << format_double(std::abs(s.value)) << ','
       << format_double(arg_of(s.value)) << '\n';
  }
}

void write_json(std::ostream& os, const SweepResult& result, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta;
  meta["component"] = component_name(cfg.component);
  meta["gamma"] = cfg.gamma;
  if (cfg.epsilon)
    meta["epsilon"] = *cfg.epsilon;
  else
    meta["epsilon"] = nullptr;
  meta["gamma_effective"] = cfg.gamma_effective();
  meta["delta"] = cfg.delta;
  meta["rabi"] = cfg.rabi;
  meta["saturation"] = cfg.saturation;
  meta["omega_min"] = cfg.omega_min;
  meta["omega_max"] = cfg.omega_max;
  meta["points"] = cfg.points;
  meta["method"] = method_name(cfg.method);
  meta["scale"] = cfg.scale;
  meta["tolerance"] = cfg.tolerance;
  meta["version"] = kVersion;
  j["meta"] = meta;
  j["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : result.samples) {
    nlohmann::ordered_json e;
    e["omega"] = s.omega;
    e["re"] = s.value.real();
    e["im"] = s.value.imag();
    e["abs"] = std::abs(s.value);
    e["arg"] = arg_of(s.value);
    j["samples"].push_back(e);
  }
  os << j.dump(2) << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "usage: mollow <sweep|figure|roots|check|docs> [options]\n";
    return kUsage;
  }
  const std::string cmd = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (cmd == "sweep") return cmd_sweep(rest, out, err);
    if (cmd == "figure") return cmd_figure(rest, out, err);
    if (cmd == "roots") return cmd_roots(rest, out, err);
    if (cmd == "check") return cmd_check(rest, out, err);
    if (cmd == "docs") return cmd_docs(out);
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
      out << "mollow " << kVersion
          << " - nonlinear susceptibility of a coherently driven cold atomic ensemble\n"
             "subcommands:\n"
             "  sweep   evaluate one component over a probe-detuning grid\n"
             "  figure  emit the preset parameter scans (fig3, fig4, fig5)\n"
             "  roots   Mollow triplet quasi-energies\n"
             "  check   run the cross-validation suite, exit 0 iff all pass\n"
             "  docs    print the derivation-tag reference map\n";
      return kOk;
    }
    if (cmd == "--version") {
      out << kVersion << "\n";
      return kOk;
    }
  } catch (const HelpRequested& h) {
    out << h.text;
    return kOk;
  } catch (const UsageError& e) {
    err << cmd << ": " << e.what() << "\n";
    return kUsage;
  }
  err << "unknown subcommand: " << cmd << "\n";
  return kUsage;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace mollow::cli
