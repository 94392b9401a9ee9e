// spinpair command-line front end: deterministic CSV emitters for gain
// scans, linearized pair dynamics, the exact pair-basis reference model, and
// two-ensemble quasi-spin statistics.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinpair/errors.hpp"
#include "spinpair/fock.hpp"
#include "spinpair/form_factor.hpp"
#include "spinpair/gain.hpp"
#include "spinpair/model.hpp"
#include "spinpair/pair_dynamics.hpp"
#include "spinpair/quasi_spin.hpp"

namespace {

using spinpair::Vec3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain-text configuration: one `key = value` per line, # comments, with
// --set key=value overrides applied afterwards.
class RunConfig {
 public:
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      const std::size_t eq = trimmed.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
      }
      set(trim(trimmed.substr(0, eq)), trim(trimmed.substr(eq + 1)));
    }
  }

  void apply_override(const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + assignment + "'");
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
  }

  double number(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("invalid numeric value for key '" + key + "': " + it->second);
    }
  }

  long integer(const std::string& key, long fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      const long v = std::stol(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("invalid integer value for key '" + key + "': " + it->second);
    }
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

 private:
  static std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  }

  void set(const std::string& key, const std::string& value) {
    static const std::map<std::string, int> known{
        {"sigma_z", 0},    {"sigma_perp", 0}, {"n0", 0},        {"q_mag", 0},
        {"detuning", 0},   {"rate_ref", 0},   {"chi", 0},       {"t_max", 0},
        {"n_times", 0},    {"theta_min", 0},  {"theta_max", 0}, {"n_theta", 0},
        {"angular_nodes", 0}, {"output_path", 0}, {"convention_factor", 0},
    };
    if (key.empty()) throw ConfigError("empty config key");
    if (known.find(key) == known.end()) throw ConfigError("unknown config key '" + key + "'");
    values_[key] = value;
  }

  std::map<std::string, std::string> values_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> linspace(double lo, double hi, long n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    xs[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return xs;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output_path: " + path);
  return out;
}

spinpair::CondensateGeometry geometry_from(const RunConfig& cfg) {
  return {cfg.number("sigma_z", 10.0), cfg.number("sigma_perp", 1.0), cfg.integer("n0", 100)};
}

double detuning_from(const RunConfig& cfg, double q_mag) {
  // Fig.-2 style symmetric shell unless an explicit detuning is given.
  return cfg.has("detuning") ? cfg.number("detuning", 0.0) : 0.5 * q_mag * q_mag;
}

int cmd_gain_scan(const RunConfig& cfg) {
  const spinpair::CondensateGeometry geom = geometry_from(cfg);
  const double q_mag = cfg.number("q_mag", 10.0);
  const spinpair::ModelParams params(detuning_from(cfg, q_mag), cfg.number("rate_ref", 1.0));

  const double theta_min = cfg.number("theta_min", 0.0) * M_PI / 180.0;
  const double theta_max = cfg.number("theta_max", 90.0) * M_PI / 180.0;
  const long n_theta = cfg.integer("n_theta", 91);
  if (n_theta < 1) throw ConfigError("n_theta must be >= 1");

  spinpair::AngularGrid grid;
  const long nodes = cfg.integer("angular_nodes", 256);
  if (nodes < 2) throw ConfigError("angular_nodes must be >= 2");
  grid.n_theta = static_cast<int>(nodes);
  grid.n_phi = static_cast<int>(nodes);

  const spinpair::GainScan scan =
      spinpair::gain_scan_theta(geom, params, q_mag, linspace(theta_min, theta_max, n_theta), grid);

  std::ofstream out = open_output(cfg.text("output_path", "out.csv"));
  out << "theta_deg,g_raw,g_normalized\n";
  for (const spinpair::GainPoint& p : scan.points) {
    out << fmt(p.theta * 180.0 / M_PI) << ',' << fmt(p.g_raw) << ',' << fmt(p.g_normalized) << '\n';
  }
  return 0;
}

int cmd_dynamics(const RunConfig& cfg) {
  const spinpair::CondensateGeometry geom = geometry_from(cfg);
  const double q_mag = cfg.number("q_mag", 10.0);
  const spinpair::ModelParams params(detuning_from(cfg, q_mag), cfg.number("rate_ref", 1.0));
  const double rate = params.rate_ref;
  const long n_times = cfg.integer("n_times", 51);
  if (n_times < 1) throw ConfigError("n_times must be >= 1");
  const std::vector<double> times = linspace(0.0, cfg.number("t_max", 5.0), n_times);

  const Vec3 q(0.0, 0.0, q_mag);
  const Vec3 q_back = -q;

  std::ofstream out = open_output(cfg.text("output_path", "out.csv"));
  out << "t,n_plus,n_minus,c_onshell_re,c_onshell_im,c_onshell_abs2_over_nn1\n";
  for (double t : times) {
    const spinpair::ModePopulation pop = spinpair::mode_population(rate, t);
    const std::complex<double> c =
        spinpair::pair_correlation(geom, params, q, q_back, rate, rate, t);
    const double nn1 = pop.n_plus * (pop.n_plus + 1.0);
    const double ratio = nn1 > 0.0 ? std::norm(c) / nn1 : 0.0;
    out << fmt(t) << ',' << fmt(pop.n_plus) << ',' << fmt(pop.n_minus) << ',' << fmt(c.real())
        << ',' << fmt(c.imag()) << ',' << fmt(ratio) << '\n';
  }
  return 0;
}

int cmd_fock(const RunConfig& cfg) {
  const long n0 = cfg.integer("n0", 100);
  const double chi = cfg.number("chi", 0.01);
  const long n_times = cfg.integer("n_times", 51);
  if (n_times < 1) throw ConfigError("n_times must be >= 1");
  const std::vector<double> times = linspace(0.0, cfg.number("t_max", 5.0), n_times);

  const spinpair::PairBasisHamiltonian h = spinpair::build_hamiltonian(n0, chi);
  const spinpair::FockEvolution evolution = spinpair::evolve(h, times);
  const std::vector<spinpair::FockObservables> records = spinpair::observables(evolution);

  std::ofstream out = open_output(cfg.text("output_path", "out.csv"));
  out << "t,n0_mean,n_pair_mean,var_lz,norm_drift\n";
  for (const spinpair::FockObservables& rec : records) {
    out << fmt(rec.t) << ',' << fmt(rec.n0_mean) << ',' << fmt(rec.n_pair_mean) << ','
        << fmt(rec.var_lz) << ',' << fmt(std::abs(rec.norm - 1.0)) << '\n';
  }
  return 0;
}

int cmd_spin_stats(const RunConfig& cfg, const std::string& coeff_path) {
  const long n = cfg.integer("n0", 100);
  const double f = cfg.number("convention_factor", 1.0);
  const spinpair::EprState state = coeff_path.empty()
                                       ? spinpair::binomial_epr_state(n)
                                       : spinpair::load_epr_state_file(coeff_path, n);
  const spinpair::SpinStats stats = spinpair::lz_stats(state, f);
  const double product_var = spinpair::product_state_variance(n, f);

  std::ofstream out = open_output(cfg.text("output_path", "out.csv"));
  out << "N,mean_l,var_l,mean_r,var_r,mean_total,var_total,product_var,squeezing_ratio\n";
  out << n << ',' << fmt(stats.mean_l) << ',' << fmt(stats.var_l) << ',' << fmt(stats.mean_r)
      << ',' << fmt(stats.var_r) << ',' << fmt(stats.mean_total) << ',' << fmt(stats.var_total)
      << ',' << fmt(product_var) << ',' << fmt(stats.var_total / product_var) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-exchange pair creation: gain spectra, pair dynamics, exact reference model, quasi-spin statistics"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string coeff_path;
  app.add_option("--config", config_path, "configuration file (key = value lines)");
  app.add_option("--set", overrides, "override a config key, e.g. --set q_mag=20");

  CLI::App* gain = app.add_subcommand("gain-scan", "gain versus emission angle");
  CLI::App* dyn = app.add_subcommand("dynamics", "linearized side-mode populations and pair correlation");
  CLI::App* fock = app.add_subcommand("fock", "exact pair-basis evolution with pump depletion");
  CLI::App* spin = app.add_subcommand("spin-stats", "two-ensemble quasi-spin statistics");
  spin->add_option("--coeffs", coeff_path, "coefficient file (one 'm real imag' per line)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const std::string& assignment : overrides) cfg.apply_override(assignment);

    if (gain->parsed()) return cmd_gain_scan(cfg);
    if (dyn->parsed()) return cmd_dynamics(cfg);
    if (fock->parsed()) return cmd_fock(cfg);
    if (spin->parsed()) return cmd_spin_stats(cfg, coeff_path);
    return 1;
  } catch (const spinpair::ClosedChannel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const spinpair::NonConvergent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const spinpair::AllZeroScan& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const spinpair::Overflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const spinpair::OddAtomNumber& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const spinpair::NonUnitary& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 6;
  } catch (const spinpair::NotNormalized& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 7;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
