// cv-triparty: parameter sweeps, key windows and plots for the three
// tripartite models. See README.md for the flag reference.

#include "cvtri/asym_tw.hpp"
#include "cvtri/cavity.hpp"
#include "cvtri/csv.hpp"
#include "cvtri/errors.hpp"
#include "cvtri/svg_plot.hpp"
#include "cvtri/sweep.hpp"
#include "cvtri/symmetric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cvtri::CsvTable;
using cvtri::format_number;

constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;

// Mode labels in column names are 1-based, steered mode first.
std::string pair_label(const cvtri::OrderedPair& p) {
  return std::to_string(p.steered + 1) + std::to_string(p.steerer + 1);
}

struct SymmetricOptions {
  double r_min = 0.0;
  double r_max = 2.0;
  std::size_t steps = 201;
  double mu = 2.0 / 3.0;
  double nu = 0.5;
};

struct AsymOptions {
  double kappa_ratio = 0.6;
  double zt_min = 0.0;
  double zt_max = 3.0;
  std::size_t steps = 301;
  std::string coefficients = "canonical";
  bool find_window = false;
};

struct CavityOptions {
  cvtri::CavityParams params;
  double eps_frac = 0.8;
  double omega_min = -6.0;
  double omega_max = 6.0;
  std::size_t steps = 481;
  std::string sweep_pump;
};

struct PlotOptions {
  std::string csv;
  std::vector<std::string> columns;
};

struct OutputOptions {
  std::string out;
  std::string plot;
};

void emit(const CsvTable& table, const OutputOptions& o, const std::vector<std::string>& plot_columns) {
  if (o.out.empty()) {
    table.write(std::cout);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    table.write(f);
  }
  if (!o.plot.empty()) {
    std::ofstream f(o.plot, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.plot);
    cvtri::render_plot(table, plot_columns, f);
  }
}

CsvTable run_symmetric(const SymmetricOptions& o) {
  const auto grid = cvtri::linspace(o.r_min, o.r_max, o.steps);
  CsvTable t;
  t.subcommand = "symmetric";
  t.params = {{"r_min", format_number(o.r_min)}, {"r_max", format_number(o.r_max)},
              {"steps", std::to_string(o.steps)}, {"mu", format_number(o.mu)},
              {"nu", format_number(o.nu)}};
  t.columns = {"r", "ds_plus", "ds_minus", "pi_min", "v_ij", "v_ijk", "e_3_1", "e_3_2", "closed_form_err"};
  for (const auto& row : cvtri::symmetric_sweep(o.mu, o.nu, grid)) {
    t.rows.push_back({row.r, row.ds_plus, row.ds_minus, row.pi_min, row.v_ij, row.v_ijk, row.e_3_1,
                      row.e_3_2, row.closed_form_err});
  }
  return t;
}

std::string window_line(const cvtri::AsymParams& p, std::size_t steered, std::size_t steerer,
                        double zt_max) {
  const auto w = cvtri::key_window(p, steered, steerer, zt_max);
  std::string line = "key_window steered=" + std::to_string(steered + 1) +
                     " steerer=" + std::to_string(steerer + 1) + ": ";
  if (!w) return line + "none";
  return line + "lo=" + format_number(w->lo) + " hi=" + format_number(w->hi) +
         (w->closed_high ? " closed" : " open");
}

CsvTable run_asym(const AsymOptions& o) {
  const auto mode = o.coefficients == "paper-literal" ? cvtri::CoefficientMode::PaperLiteral
                                                      : cvtri::CoefficientMode::Canonical;
  const auto params = cvtri::AsymParams::with_ratio(o.kappa_ratio, mode);
  const auto grid = cvtri::linspace(o.zt_min, o.zt_max, o.steps);
  CsvTable t;
  t.subcommand = "asym-tw";
  t.params = {{"kappa_ratio", format_number(o.kappa_ratio)}, {"zt_min", format_number(o.zt_min)},
              {"zt_max", format_number(o.zt_max)}, {"steps", std::to_string(o.steps)},
              {"coefficients", o.coefficients}, {"find_window", o.find_window ? "1" : "0"}};
  t.columns = {"zt", "ds_minus_13", "v_123", "v_312", "v_13", "pi_13", "pi_31", "k_13", "k_31"};
  for (const auto& r : cvtri::asym_tw_sweep(params, grid)) {
    t.rows.push_back({r.zt, r.ds_minus_13, r.v_123, r.v_312, r.v_13, r.pi_13, r.pi_31, r.k_13, r.k_31});
  }
  if (o.find_window) {
    const std::string a = window_line(params, 2, 0, o.zt_max);
    const std::string b = window_line(params, 0, 2, o.zt_max);
    if (a.ends_with("none") && b.ends_with("none")) {
      throw cvtri::PhysicalRegimeError("no positive key-rate window in [0, " +
                                       format_number(o.zt_max) + "]");
    }
    t.trailer = {a, b};
  }
  return t;
}

struct PumpRange {
  double lo;
  double hi;
  std::size_t steps;
};

PumpRange parse_pump_range(const std::string& spec) {
  std::istringstream in(spec);
  in.imbue(std::locale::classic());
  PumpRange r{};
  char c1 = 0, c2 = 0;
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.steps) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw std::invalid_argument("--sweep-pump expects lo:hi:steps, got '" + spec + "'");
  }
  return r;
}

CsvTable run_cavity(const CavityOptions& o) {
  const double eps_c = cvtri::critical_pump(o.params);
  const auto omegas = cvtri::linspace(o.omega_min, o.omega_max, o.steps);
  CsvTable t;
  t.subcommand = "cavity";
  const auto& p = o.params;
  t.params = {{"gamma0", format_number(p.gamma0)}, {"gamma1", format_number(p.gamma1)},
              {"gamma2", format_number(p.gamma2)}, {"gamma3", format_number(p.gamma3)},
              {"kappa1", format_number(p.kappa1)}, {"kappa2", format_number(p.kappa2)},
              {"omega_min", format_number(o.omega_min)}, {"omega_max", format_number(o.omega_max)},
              {"steps", std::to_string(o.steps)}, {"epsilon_c", format_number(eps_c)}};

  if (!o.sweep_pump.empty()) {
    const PumpRange range = parse_pump_range(o.sweep_pump);
    if (range.hi >= 1.0) {
      throw cvtri::PhysicalRegimeError("pump sweep reaches threshold (eps/eps_c = " +
                                       format_number(range.hi) + ")");
    }
    if (!(range.lo >= 0.0)) throw std::invalid_argument("--sweep-pump: lo must be >= 0");
    t.params["sweep_pump"] = o.sweep_pump;
    const auto fracs = cvtri::linspace(range.lo, range.hi, range.steps);
    t.columns = {"eps_frac"};
    for (const auto& pr : cvtri::kOrderedPairs) t.columns.push_back("min_pi_" + pair_label(pr));
    for (const auto& pr : cvtri::kOrderedPairs) t.columns.push_back("max_k_" + pair_label(pr));
    for (const auto& row : cvtri::pump_sweep(p, fracs, omegas)) {
      std::vector<double> v{row.eps_frac};
      v.insert(v.end(), row.min_pi.begin(), row.min_pi.end());
      v.insert(v.end(), row.max_k.begin(), row.max_k.end());
      t.rows.push_back(std::move(v));
    }
    return t;
  }

  if (!(o.eps_frac >= 0.0)) throw std::invalid_argument("--eps-frac must be >= 0");
  if (o.eps_frac >= 1.0) {
    throw cvtri::PhysicalRegimeError("--eps-frac " + format_number(o.eps_frac) +
                                     " is at or above threshold");
  }
  t.params["eps_frac"] = format_number(o.eps_frac);
  const auto system = cvtri::build_system(p.with_pump_fraction(o.eps_frac));
  t.columns = {"omega"};
  for (const auto& pr : cvtri::kOrderedPairs) t.columns.push_back("pi_" + pair_label(pr));
  for (const auto& pr : cvtri::kOrderedPairs) t.columns.push_back("k_" + pair_label(pr));
  for (const auto& row : cvtri::cavity_omega_sweep(system, omegas)) {
    std::vector<double> v{row.omega};
    v.insert(v.end(), row.pi.begin(), row.pi.end());
    v.insert(v.end(), row.k.begin(), row.k.end());
    t.rows.push_back(std::move(v));
  }
  return t;
}

std::vector<std::string> k_columns(const CsvTable& t) {
  std::vector<std::string> out;
  for (const auto& c : t.columns) {
    if (c.starts_with("k_") || c.starts_with("max_k_")) out.push_back(c);
  }
  return out;
}

// Fills options the command line left unset from a JSON object whose keys
// are long flag names without the leading dashes.
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  if (!j.is_object()) throw CLI::ValidationError("--config", "top level must be an object");
  for (const auto& [key, value] : j.items()) {
    CLI::Option* opt = key == "config" || key == "help" ? nullptr : sub.get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw CLI::ValidationError("--config", "unknown key '" + key + "' for " + sub.get_name());
    }
    if (opt->count() > 0) continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_boolean()) {
      text = value.get<bool>() ? "true" : "false";
    } else if (value.is_number()) {
      text = value.dump();
    } else {
      throw CLI::ValidationError("--config", "value of '" + key + "' must be a scalar");
    }
    opt->add_result(text);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement, steering and key-rate sweeps for three-mode Gaussian states"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string config;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out.out, "CSV output path (default stdout)");
    sub->add_option("--plot", out.plot, "Also write an SVG plot to this path");
    sub->add_option("--config", config, "JSON file of flag defaults")->check(CLI::ExistingFile);
  };

  SymmetricOptions sym;
  CLI::App* symmetric = app.add_subcommand("symmetric", "Symmetric three-beam network, sweep over r");
  symmetric->add_option("--r-min", sym.r_min, "Smallest squeezing parameter")->capture_default_str();
  symmetric->add_option("--r-max", sym.r_max, "Largest squeezing parameter")->capture_default_str();
  symmetric->add_option("--steps", sym.steps, "Grid points")->capture_default_str()->check(CLI::Range(2, 1000000));
  symmetric->add_option("--mu", sym.mu, "Reflectivity of the first beamsplitter")->capture_default_str();
  symmetric->add_option("--nu", sym.nu, "Reflectivity of the second beamsplitter")->capture_default_str();
  add_common(symmetric);

  AsymOptions asym;
  CLI::App* asym_tw = app.add_subcommand("asym-tw", "Travelling-wave model, sweep over zeta*t");
  asym_tw->add_option("--kappa-ratio", asym.kappa_ratio, "kappa2 / kappa1")->capture_default_str();
  asym_tw->add_option("--zt-min", asym.zt_min, "Smallest zeta*t")->capture_default_str();
  asym_tw->add_option("--zt-max", asym.zt_max, "Largest zeta*t; also the window scan limit")->capture_default_str();
  asym_tw->add_option("--steps", asym.steps, "Grid points")->capture_default_str()->check(CLI::Range(2, 1000000));
  asym_tw->add_option("--coefficients", asym.coefficients, "Solution coefficients")
      ->capture_default_str()
      ->check(CLI::IsMember({"canonical", "paper-literal"}));
  asym_tw->add_flag("--find-window", asym.find_window, "Append key-rate window endpoints");
  add_common(asym_tw);

  CavityOptions cav;
  CLI::App* cavity = app.add_subcommand("cavity", "Intracavity model, output spectra below threshold");
  cavity->add_option("--eps-frac", cav.eps_frac, "Pump as a fraction of threshold")->capture_default_str();
  cavity->add_option("--omega-min", cav.omega_min, "Lowest frequency (units of gamma1)")->capture_default_str();
  cavity->add_option("--omega-max", cav.omega_max, "Highest frequency")->capture_default_str();
  cavity->add_option("--steps", cav.steps, "Frequency grid points")->capture_default_str()->check(CLI::Range(2, 1000000));
  cavity->add_option("--sweep-pump", cav.sweep_pump, "lo:hi:steps in eps/eps_c; extremal over omega");
  cavity->add_option("--gamma0", cav.params.gamma0, "Pump-mode decay")->capture_default_str();
  cavity->add_option("--gamma1", cav.params.gamma1, "Mode 1 decay")->capture_default_str();
  cavity->add_option("--gamma2", cav.params.gamma2, "Mode 2 decay")->capture_default_str();
  cavity->add_option("--gamma3", cav.params.gamma3, "Mode 3 decay")->capture_default_str();
  cavity->add_option("--kappa1", cav.params.kappa1, "Downconversion coupling")->capture_default_str();
  cavity->add_option("--kappa2", cav.params.kappa2, "Sum-frequency coupling")->capture_default_str();
  add_common(cavity);

  PlotOptions plot;
  CLI::App* plot_cmd = app.add_subcommand("plot", "Render columns of a CSV file as SVG");
  plot_cmd->add_option("csv", plot.csv, "Input CSV")->required();
  plot_cmd->add_option("--columns", plot.columns, "Columns to plot")->required()->delimiter(',');
  plot_cmd->add_option("--out", out.out, "SVG output path (default stdout)");

  try {
    app.parse(argc, argv);
    for (CLI::App* sub : {symmetric, asym_tw, cavity}) {
      if (sub->parsed() && !config.empty()) apply_config(*sub, config);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (symmetric->parsed()) {
      emit(run_symmetric(sym), out, {"ds_plus", "ds_minus", "v_ij", "v_ijk"});
    } else if (asym_tw->parsed()) {
      emit(run_asym(asym), out, {"ds_minus_13", "v_123", "v_312", "v_13"});
    } else if (cavity->parsed()) {
      const CsvTable t = run_cavity(cav);
      emit(t, out, k_columns(t));
    } else if (plot_cmd->parsed()) {
      const CsvTable t = cvtri::read_csv(plot.csv);
      if (out.out.empty()) {
        cvtri::render_plot(t, plot.columns, std::cout);
      } else {
        std::ostringstream svg;
        cvtri::render_plot(t, plot.columns, svg);
        std::ofstream f(out.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + out.out);
        f << svg.str();
      }
    }
  } catch (const cvtri::PhysicalRegimeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRegime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
