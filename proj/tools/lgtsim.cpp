// lgtsim: scenario runner for the lattice gauge theory library.
//
// Subcommands:
//   evolve     --config <path> --out <path>   run a scenario, write CSV
//   check      <suite> [--json <path>]        run a verification suite
//   dispersion --config <path> --kmin --kmax --kn
//   sweep      --config-dir <path>            run every config in a directory
//
// Exit codes: 0 success, 1 validation error, 2 runtime (saturation) error,
// 3 check-suite failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "lgt/checks.hpp"
#include "lgt/config.hpp"
#include "lgt/maxwell.hpp"
#include "lgt/random_fields.hpp"

namespace {

using nlohmann::json;

lgt::SpinorField initial_field(const lgt::ScenarioConfig& cfg) {
  switch (cfg.initial) {
    case lgt::InitialKind::plane_wave:
      return lgt::plane_wave(cfg.lattice, cfg.k);
    case lgt::InitialKind::gaussian:
      return lgt::gaussian_packet(cfg.lattice, cfg.center, cfg.width, cfg.k0);
    case lgt::InitialKind::delta: {
      lgt::SpinorField psi(cfg.lattice.sites);
      psi[cfg.delta_site].up = lgt::cplx(cfg.delta_up_re, cfg.delta_up_im);
      psi[cfg.delta_site].dn = lgt::cplx(cfg.delta_dn_re, cfg.delta_dn_im);
      return psi;
    }
  }
  throw std::logic_error("unreachable");
}

// Static gauge background for the non-coupled schemes: A_1 grows linearly in
// time under a constant electric field (temporal-gauge relation E = dR_0 A_1).
lgt::GaugeField build_gauge(const lgt::ScenarioConfig& cfg,
                            const lgt::SpinorField& psi0, int slices) {
  lgt::LatticeSpec gspec = cfg.lattice;
  gspec.steps = slices;
  lgt::GaugeField g = lgt::GaugeField::zero(gspec);
  std::vector<double> e(cfg.lattice.sites, 0.0);
  if (cfg.profile == lgt::GaugeProfile::uniform_E) {
    e.assign(cfg.lattice.sites, cfg.uniform_e_value);
  } else if (cfg.profile == lgt::GaugeProfile::from_gauss) {
    const lgt::WalkOperator walk = lgt::build_dirac_walk(cfg.lattice);
    const lgt::SpinorField psi1 = lgt::walk_step(walk, psi0, cfg.lattice);
    std::vector<double> j0(cfg.lattice.sites, 0.0);
    double mean = 0.0;
    for (int p = 0; p < cfg.lattice.sites; ++p)
      mean += (j0[p] = cfg.lattice.epsilon *
                       lgt::cdot(psi0[p], psi1[p]).real());
    mean /= cfg.lattice.sites;
    for (double& v : j0) v -= mean;  // neutralizing uniform background
    e = lgt::gauss_solve(j0, cfg.lattice, 0.0);
  }
  for (int j = 0; j < slices; ++j)
    for (int p = 0; p < cfg.lattice.sites; ++p) {
      g.a1[j][p] = cfg.lattice.epsilon * e[p] * j;
      if (cfg.a0_profile == lgt::A0Profile::uniform)
        g.a0[j][p] = cfg.a0_value;
    }
  return g;
}

struct Row {
  int step = 0;
  double norm = 0.0;
  double total_charge = 0.0;
  double gauss_residual = 0.0;
  double two_step_residual = 0.0;
};

std::vector<Row> run_scenario(const lgt::ScenarioConfig& cfg) {
  const lgt::LatticeSpec& spec = cfg.lattice;
  const int N = cfg.steps;
  const lgt::SpinorField psi0 = initial_field(cfg);
  std::vector<Row> rows(N + 1);
  for (int j = 0; j <= N; ++j) rows[j].step = j;

  if (cfg.scheme == lgt::Scheme::coupled) {
    lgt::CoupledOptions opt;
    opt.steps = N;
    if (cfg.profile == lgt::GaugeProfile::uniform_E) {
      opt.solve_initial_gauss = false;
      opt.initial_e.assign(spec.sites, cfg.uniform_e_value);
    }
    const lgt::CoupledResult run = lgt::coupled_evolve(spec, psi0, opt);
    for (int j = 0; j <= N; ++j) {
      const auto& rec = run.records[j];
      rows[j].norm = rec.norm;
      rows[j].total_charge = rec.total_charge;
      rows[j].gauss_residual = rec.max_gauss_residual;
    }
    return rows;
  }

  // build the history
  lgt::FieldHistory h;
  h.spec = spec;
  h.slices.push_back(psi0);
  const lgt::WalkOperator walk = lgt::build_dirac_walk(spec);
  const bool gauged =
      cfg.gauge_enabled && cfg.profile != lgt::GaugeProfile::zero;
  lgt::GaugeField gauge;
  if (gauged) gauge = build_gauge(cfg, psi0, N + 1);

  if (cfg.scheme == lgt::Scheme::one_step) {
    for (int j = 0; j < N; ++j)
      h.slices.push_back(gauged
                             ? lgt::gauged_walk_step(walk, gauge, j,
                                                     h.slices[j])
                             : lgt::walk_step(walk, h.slices[j], spec));
  } else {
    const lgt::TwoStepScheme ts = cfg.scheme == lgt::Scheme::two_step_naive
                                      ? lgt::TwoStepScheme::naive
                                      : lgt::TwoStepScheme::unitary;
    // seed the second slice with the unitary one-step walk
    h.slices.push_back(lgt::walk_step(walk, psi0, spec));
    for (int j = 1; j < N; ++j)
      h.slices.push_back(
          lgt::two_step_advance(h.slices[j - 1], h.slices[j], spec, ts));
  }

  const lgt::CurrentField current =
      lgt::closed_form_u1_current(h, gauged ? &gauge : nullptr);
  const std::vector<double> q = lgt::total_charge(current);
  const lgt::TwoStepScheme rs = cfg.scheme == lgt::Scheme::two_step_naive
                                    ? lgt::TwoStepScheme::naive
                                    : lgt::TwoStepScheme::unitary;
  for (int j = 0; j <= N; ++j) {
    rows[j].norm = lgt::field_norm(h.at(j), spec);
    rows[j].total_charge = q[std::min(j, N - 1)];
    if (j >= 1 && j <= N - 1)
      rows[j].two_step_residual =
          gauged ? lgt::induced_two_step_residual(h, walk, gauge, j).max_abs()
                 : lgt::two_step_residual(h, j, rs).max_abs();
  }
  return rows;
}

void write_csv(const std::string& path, const std::vector<Row>& rows,
               const std::vector<std::string>& observables) {
  auto wants = [&](const char* name) {
    for (const auto& o : observables)
      if (o == name) return true;
    return false;
  };
  std::ofstream out(path);
  if (!out) throw lgt::ConfigError("cannot open output file: " + path);
  out << std::setprecision(17);
  out << "step";
  for (const char* col : {"norm", "total_charge", "gauss_residual",
                          "two_step_residual"})
    if (wants(col)) out << ',' << col;
  out << '\n';
  for (const auto& r : rows) {
    out << r.step;
    if (wants("norm")) out << ',' << r.norm;
    if (wants("total_charge")) out << ',' << r.total_charge;
    if (wants("gauss_residual")) out << ',' << r.gauss_residual;
    if (wants("two_step_residual")) out << ',' << r.two_step_residual;
    out << '\n';
  }
}

void write_summary(const std::string& csv_path,
                   const lgt::ScenarioConfig& cfg,
                   const std::vector<Row>& rows) {
  json j;
  j["scheme"] = lgt::to_string(cfg.scheme);
  j["steps"] = cfg.steps;
  j["seed"] = cfg.seed;
  j["lattice"] = {{"sites", cfg.lattice.sites},
                  {"epsilon", cfg.lattice.epsilon},
                  {"mass", cfg.lattice.mass},
                  {"charge", cfg.lattice.charge}};
  j["initial_norm"] = rows.front().norm;
  j["final_norm"] = rows.back().norm;
  j["output"] = csv_path;
  std::ofstream out(csv_path + ".summary.json");
  out << j.dump(2) << '\n';
}

int cmd_evolve(const std::string& config_path, const std::string& out_path) {
  const lgt::ScenarioConfig cfg =
      lgt::ScenarioConfig::from_map(lgt::parse_config_file(config_path));
  const std::vector<Row> rows = run_scenario(cfg);
  write_csv(out_path, rows, cfg.observables);
  if (cfg.format == "json") write_summary(out_path, cfg, rows);
  return 0;
}

int cmd_check(const std::string& suite, const std::string& json_path) {
  const lgt::CheckReport rep = lgt::run_check_suite(suite);
  for (const auto& item : rep.items)
    std::cout << (item.pass ? "PASS" : "FAIL") << ' ' << rep.suite << '/'
              << item.name << ": defect " << std::scientific
              << std::setprecision(3) << item.defect << " (" << item.criterion
              << ")\n";
  if (!json_path.empty()) {
    json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["pass"] = rep.all_pass();
    j["items"] = json::array();
    for (const auto& item : rep.items)
      j["items"].push_back({{"name", item.name},
                            {"defect", item.defect},
                            {"tolerance", item.tolerance},
                            {"criterion", item.criterion},
                            {"pass", item.pass}});
    std::ofstream out(json_path);
    if (!out) throw lgt::ConfigError("cannot open output file: " + json_path);
    out << j.dump(2) << '\n';
  }
  return rep.all_pass() ? 0 : 3;
}

int cmd_dispersion(const std::string& config_path, double kmin, double kmax,
                   int kn) {
  if (kn < 2) throw lgt::ConfigError("--kn must be >= 2");
  const lgt::ScenarioConfig cfg =
      lgt::ScenarioConfig::from_map(lgt::parse_config_file(config_path));
  std::cout << std::setprecision(17) << "k,omega_lattice,omega_continuum\n";
  for (int i = 0; i < kn; ++i) {
    const double k = kmin + (kmax - kmin) * i / (kn - 1);
    const double m = cfg.lattice.mass;
    std::cout << k << ',' << lgt::dispersion(k, cfg.lattice) << ','
              << std::sqrt(k * k + m * m) << '\n';
  }
  return 0;
}

int cmd_sweep(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw lgt::ConfigError("not a directory: " + dir);
  std::vector<fs::path> configs;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".toml" ||
        entry.path().extension() == ".cfg")
      configs.push_back(entry.path());
  std::sort(configs.begin(), configs.end());
  if (configs.empty())
    throw lgt::ConfigError("no .toml or .cfg configs in " + dir);
  for (const auto& path : configs) {
    fs::path out = path;
    out.replace_extension(".csv");
    cmd_evolve(path.string(), out.string());
    std::cout << path.filename().string() << " -> "
              << out.filename().string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice gauge theory simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, suite, json_path, config_dir;
  double kmin = 0.0, kmax = 0.0;
  int kn = 64;

  auto* evolve = app.add_subcommand("evolve", "run a scenario");
  evolve->add_option("--config", config_path)->required();
  evolve->add_option("--out", out_path)->required();

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite, "one of: unitarity, noether, appendixB, "
                                    "gauging_order, maxwell_oracle, "
                                    "continuum")
      ->required();
  check->add_option("--json", json_path);

  auto* dispersion = app.add_subcommand("dispersion", "dispersion scan");
  dispersion->add_option("--config", config_path)->required();
  dispersion->add_option("--kmin", kmin)->required();
  dispersion->add_option("--kmax", kmax)->required();
  dispersion->add_option("--kn", kn);

  auto* sweep = app.add_subcommand("sweep", "run every config in a directory");
  sweep->add_option("--config-dir", config_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (evolve->parsed()) return cmd_evolve(config_path, out_path);
    if (check->parsed()) return cmd_check(suite, json_path);
    if (dispersion->parsed())
      return cmd_dispersion(config_path, kmin, kmax, kn);
    if (sweep->parsed()) return cmd_sweep(config_dir);
  } catch (const lgt::ConfigError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const lgt::SaturationError& err) {
    std::cerr << "runtime error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "runtime error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
