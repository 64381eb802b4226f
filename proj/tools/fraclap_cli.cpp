// fraclap: command-line front end over the C interface.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fraclap/fraclap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Failure {
  int code;
  std::string message;
};

void check(fl_status s) {
  if (s == FL_OK) return;
  const int code = (s == FL_CONVERGENCE || s == FL_INTERNAL) ? kExitNumeric : kExitUsage;
  throw Failure{code, fl_last_error()};
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Rows of already formatted cells, written as CSV or as an aligned table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, bool pretty) const {
    if (!pretty) {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << "  ";
        os << std::string(w[i] - r[i].size(), ' ') << r[i];
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

struct Common {
  std::string out;
  std::string config;
  std::string format = "csv";
  double tol = 0.0;
};

void emit(const Table& t, const Common& c) {
  if (c.out.empty() || c.out == "-") {
    t.write(std::cout, c.format == "table");
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot write '" + c.out + "'"};
  t.write(f, c.format == "table");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output path (default stdout)");
  sub->add_option("--config", c.config, "key = value file; flags on the command line win");
  sub->add_option("--format", c.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));
  sub->add_option("--tol", c.tol, "Relative tolerance (0 = library default)")->check(CLI::NonNegativeNumber);
}

std::vector<double> linspace(double lo, double hi, int n, bool log) {
  std::vector<double> v;
  if (n == 1) return {lo};
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    v.push_back(log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  return v;
}

// Reads `key = value` lines into --key=value arguments.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Failure{kExitUsage, "cannot read config file '" + path + "'"};
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Failure{kExitUsage, path + ":" + std::to_string(lineno) + ": expected key = value"};
    auto trim = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r");
      const auto r = s.find_last_not_of(" \t\r");
      return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config")
      throw Failure{kExitUsage, path + ":" + std::to_string(lineno) + ": invalid key '" + key + "'"};
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

void selftest_report(const char* module, const char* name, int passed, const char* detail, void*) {
  std::printf("%s  %-11s %s%s%s\n", passed ? "PASS" : "FAIL", module, name, *detail ? ": " : "", detail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Laplacian toolkit: constants, dispersion relations, operators and checks"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  Common common;

  auto* constants = app.add_subcommand("constants", "Normalization constants for (n, alpha, m)");
  int c_n = 1, c_m = 1;
  double c_alpha = 1.0, c_h = 1.0, c_zeta = 1.0;
  constants->add_option("--n", c_n, "Dimension 1..3");
  constants->add_option("--alpha", c_alpha, "Exponent")->required();
  constants->add_option("--m", c_m, "Difference order");
  constants->add_option("--h", c_h, "Lattice length for A_delta");
  constants->add_option("--zeta", c_zeta, "ln a for A_delta");
  add_common(constants, common);

  auto* dispersion = app.add_subcommand("dispersion", "Weierstrass-Mandelbrot dispersion curve");
  fl_lattice lat;
  fl_lattice_defaults(&lat);
  double kh_min = 0.0, kh_max = 10.0;
  int samples = 201;
  bool logscale = false, limit = false;
  dispersion->add_option("--delta", lat.delta, "Exponent in (0, 2m)")->required();
  dispersion->add_option("--a", lat.a, "Scale ratio > 1");
  dispersion->add_option("--m", lat.m, "Difference order");
  dispersion->add_option("--kh-min", kh_min, "First kh");
  dispersion->add_option("--kh-max", kh_max, "Last kh");
  dispersion->add_option("--samples", samples, "Number of kh values")->check(CLI::PositiveNumber);
  dispersion->add_flag("--log", logscale, "Geometric kh spacing");
  dispersion->add_flag("--limit", limit, "Add the continuum power law A (kh)^delta with A = V/ln a");
  add_common(dispersion, common);

  auto* apply = app.add_subcommand("apply", "Apply a representation to a test field along the first axis");
  std::string field = "gaussian", rep_name = "regularized";
  double a_alpha = 1.0, sigma = 1.0, wave = 1.0, x_min = -3.0, x_max = 3.0, grid_dx = 0.125;
  int a_n = 1, a_m = 1, a_samples = 13, grid_n = 65536;
  apply->add_option("--field", field, "gaussian or plane-wave")->check(CLI::IsMember({"gaussian", "plane-wave"}));
  apply->add_option("--rep", rep_name, "standard, order-m or regularized");
  apply->add_option("--alpha", a_alpha, "Exponent")->required();
  apply->add_option("--n", a_n, "Dimension 1..3");
  apply->add_option("--m", a_m, "Difference order (order-m only)");
  apply->add_option("--sigma", sigma, "Gaussian width");
  apply->add_option("--k", wave, "Plane-wave number");
  apply->add_option("--x-min", x_min, "First x");
  apply->add_option("--x-max", x_max, "Last x");
  apply->add_option("--samples", a_samples, "Number of x values")->check(CLI::PositiveNumber);
  apply->add_option("--grid-n", grid_n, "Oracle grid size (power of two)");
  apply->add_option("--grid-dx", grid_dx, "Oracle grid spacing");
  add_common(apply, common);

  auto* eig = app.add_subcommand("eig", "Plane-wave eigenvalues of a representation or a stiffness potential");
  std::string e_rep = "regularized", stiffness;
  double e_alpha = 1.0;
  int e_n = 1, e_m = 1;
  std::vector<double> ks = {0.5, 1.0, 2.0};
  eig->add_option("--rep", e_rep, "standard, order-m or regularized");
  eig->add_option("--alpha", e_alpha, "Exponent")->required();
  eig->add_option("--n", e_n, "Dimension 1..3");
  eig->add_option("--m", e_m, "Difference order (order-m only)");
  eig->add_option("--k", ks, "Wave numbers")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  eig->add_option("--stiffness", stiffness, "CSV stiffness matrix; reports its potential eigenvalue instead");
  add_common(eig, common);

  auto* converge = app.add_subcommand("converge", "Continuum limit |ln a| omega^2 -> V (kh)^delta over a sequence of a");
  fl_lattice cl;
  fl_lattice_defaults(&cl);
  double c_kh = 1.0;
  std::vector<double> as = {1.5, 1.25, 1.1, 1.05, 1.02};
  converge->add_option("--delta", cl.delta, "Exponent in (0, 2m)")->required();
  converge->add_option("--m", cl.m, "Difference order");
  converge->add_option("--kh", c_kh, "Wave number times h");
  converge->add_option("--a", as, "Scale ratios")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(converge, common);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property checks");
  std::string filter;
  bool inject = false;
  selftest->add_option("--filter", filter, "Only this module");
  selftest->add_flag("--inject-fault", inject, "Perturb a constant to prove the checks bite");
  add_common(selftest, common);

  // config-file values go first so that command-line flags override them
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
      if (path.empty()) continue;
      const auto extra = config_args(path);
      if (!args.empty()) args.insert(args.begin() + 1, extra.begin(), extra.end());
      break;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Table t;
    if (constants->parsed()) {
      fl_constants k{};
      check(fl_norm_constants(c_m, c_n, c_alpha, &k));
      std::string ad;
      double a_d = 0.0;
      if (fl_a_delta(c_alpha, c_h, c_zeta, &a_d) == FL_OK) ad = fmt(a_d);
      t.header = {"n", "alpha", "m", "U", "V", "A", "C_general", "C_standard", "A_delta", "regime"};
      t.rows.push_back({std::to_string(c_n), fmt(c_alpha), std::to_string(c_m), fmt(k.U), fmt(k.V), fmt(k.A),
                        fmt(k.c_general), fmt(k.c_standard), ad, k.distributional ? "distributional" : "fractional"});
    } else if (dispersion->parsed()) {
      if (common.tol > 0.0) lat.tol = common.tol;
      if (logscale && !(kh_min > 0.0)) throw Failure{kExitUsage, "--log needs --kh-min > 0"};
      double coef = 0.0;
      if (limit) check(fl_continuum_coefficient(lat.m, lat.delta, 1.0, &coef));
      t.header = {"kh", "omega2_wm"};
      if (limit) t.header.push_back("omega2_limit");
      for (double kh : linspace(kh_min, kh_max, samples, logscale)) {
        double w = 0.0;
        check(fl_wm_dispersion(kh, &lat, &w));
        std::vector<std::string> row = {fmt(kh), fmt(w)};
        if (limit) row.push_back(fmt(coef * std::pow(kh, lat.delta) / std::log(lat.a)));
        t.rows.push_back(row);
      }
    } else if (apply->parsed()) {
      fl_representation rep{};
      check(fl_parse_representation(rep_name.c_str(), &rep));
      fl_field* u = nullptr;
      const double kvec[3] = {wave, 0.0, 0.0};
      if (field == "gaussian") check(fl_field_gaussian(a_n, sigma, nullptr, &u));
      else check(fl_field_plane_wave(a_n, kvec, &u));
      std::unique_ptr<fl_field, void (*)(fl_field*)> hold(u, fl_field_free);
      // a 1D Gaussian is grid-compatible; the grid is centred on the field
      const bool oracle = field == "gaussian" && a_n == 1;
      std::vector<double> grid;
      const double x0 = -0.5 * grid_n * grid_dx;
      if (oracle) {
        grid.resize(static_cast<std::size_t>(grid_n));
        for (int j = 0; j < grid_n; ++j) {
          const double y = (x0 + j * grid_dx) / sigma;
          grid[static_cast<std::size_t>(j)] = std::exp(-y * y);
        }
      }
      t.header = {"x", "u", "value", "oracle", "abs_diff"};
      for (double x : linspace(x_min, x_max, a_samples, false)) {
        const double pt[3] = {x, 0.0, 0.0};
        fl_result r{};
        double ux = 0.0;
        check(fl_field_value(u, pt, &ux));
        check(fl_apply(rep, u, pt, a_alpha, a_m, common.tol, &r));
        std::vector<std::string> row = {fmt(x), fmt(ux), fmt(r.value), "", ""};
        if (oracle) {
          double o = 0.0;
          check(fl_dft_fl_at(grid.data(), grid.size(), grid_dx, a_alpha, x - x0, &o));
          row[3] = fmt(o);
          row[4] = fmt(std::abs(r.value - o));
        } else if (field == "plane-wave") {
          const double o = -std::pow(wave, a_alpha) * ux;
          row[3] = fmt(o);
          row[4] = fmt(std::abs(r.value - o));
        }
        t.rows.push_back(row);
      }
    } else if (eig->parsed()) {
      t.header = {"k", "eigenvalue", "contract", "rel_err"};
      if (!stiffness.empty()) {
        fl_stiffness* s = nullptr;
        check(fl_stiffness_load(stiffness.c_str(), &s));
        std::unique_ptr<fl_stiffness, void (*)(fl_stiffness*)> hold(s, fl_stiffness_free);
        t.header = {"k", "eigenvalue", "A_V", "C_standard"};
        double av = 0.0, cs = 0.0;
        check(fl_scaling_factor(s, e_alpha, &av));
        check(fl_c_standard(e_n, e_alpha, &cs, nullptr));
        for (double k : ks) {
          double v = 0.0;
          check(fl_potential_eigenvalue(s, e_n, e_alpha, k, &v));
          t.rows.push_back({fmt(k), fmt(v), fmt(av), fmt(cs)});
        }
      } else {
        fl_representation rep{};
        check(fl_parse_representation(e_rep.c_str(), &rep));
        for (double k : ks) {
          double v = 0.0;
          check(fl_eigenvalue(rep, e_n, e_alpha, e_m, k, &v));
          const double want = -std::pow(k, e_alpha);
          t.rows.push_back({fmt(k), fmt(v), fmt(want), fmt(std::abs(v - want) / std::abs(want))});
        }
      }
    } else if (converge->parsed()) {
      if (common.tol > 0.0) cl.tol = common.tol;
      double coef = 0.0;
      check(fl_continuum_coefficient(cl.m, cl.delta, 1.0, &coef));
      const double lim = coef * std::pow(c_kh, cl.delta);
      t.header = {"a", "zeta", "zeta_omega2", "limit", "abs_err", "envelope_rel_err"};
      for (double a : as) {
        cl.a = a;
        double w = 0.0, env = 0.0;
        check(fl_wm_dispersion(c_kh, &cl, &w));
        check(fl_continuum_envelope_error(c_kh, &cl, 64, &env));
        const double z = std::log(a);
        t.rows.push_back({fmt(a), fmt(z), fmt(z * w), fmt(lim), fmt(std::abs(z * w - lim)), fmt(env)});
      }
    } else if (selftest->parsed()) {
      int failures = 0;
      check(fl_selftest(filter.empty() ? nullptr : filter.c_str(), inject ? 1 : 0, selftest_report, nullptr, &failures));
      std::printf("%d check(s) failed\n", failures);
      return failures ? kExitSelftest : kExitOk;
    }
    emit(t, common);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitOk;
}
