#include "lgt/checks.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "lgt/maxwell.hpp"
#include "lgt/random_fields.hpp"

namespace lgt {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline int wrap(int p, int P) { return ((p % P) + P) % P; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

CheckItem at_most(const std::string& name, double defect, double tol) {
  return {name, defect, tol, "<= " + num(tol), defect <= tol};
}

CheckItem at_least(const std::string& name, double defect, double tol) {
  return {name, defect, tol, ">= " + num(tol), defect >= tol};
}

CheckItem in_band(const std::string& name, double value, double lo,
                  double hi) {
  return {name, value, hi, "in [" + num(lo) + ", " + num(hi) + "]",
          value >= lo && value <= hi};
}

double max_two_step_residual(const FieldHistory& history, TwoStepScheme s) {
  double m = 0.0;
  for (int j = 1; j <= history.num_slices() - 2; ++j)
    m = std::max(m, two_step_residual(history, j, s).max_abs());
  return m;
}

double max_abs_diff(const CurrentField& a, const CurrentField& b) {
  double m = 0.0;
  for (int j = 0; j < a.time_extent(); ++j)
    for (int p = 0; p < a.spec.sites; ++p) {
      m = std::max(m, std::abs(a.j0[j][p] - b.j0[j][p]));
      m = std::max(m, std::abs(a.j1[j][p] - b.j1[j][p]));
    }
  return m;
}

CheckReport suite_unitarity(std::uint64_t seed) {
  CheckReport rep{"unitarity", seed, {}};

  LatticeSpec spec;
  spec.sites = 256;
  spec.epsilon = 1.0;
  spec.mass = 0.3;
  const WalkOperator walk = build_dirac_walk(spec);
  rep.items.push_back(
      at_most("jump_operator_constraints", unitarity_defect(walk), 1e-14));

  SpinorField psi = random_spinor_field(spec, seed);
  const double n0 = field_norm(psi, spec);
  double drift = 0.0;
  for (int j = 0; j < 1000; ++j) {
    psi = walk_step(walk, psi, spec);
    drift = std::max(drift, std::abs(field_norm(psi, spec) - n0));
  }
  rep.items.push_back(at_most("norm_preservation_1000_steps", drift, 1e-12));

  const FieldHistory hist = walk_history(spec, 64, seed + 1);
  rep.items.push_back(
      at_most("walk_history_two_step_residual",
              max_two_step_residual(hist, TwoStepScheme::unitary), 1e-12));

  LatticeSpec small = spec;
  small.mass = 0.1;
  const double wrong = 1.0 / std::sqrt(1.0 - 0.1 * 0.1);
  rep.items.push_back(at_least(
      "wrong_sign_prefactor_breaks_unitarity",
      unitarity_defect(build_walk_with_prefactor(small, wrong)), 1e-3));
  rep.items.push_back(
      at_most("right_sign_prefactor_unitary",
              unitarity_defect(build_dirac_walk(small)), 1e-14));
  return rep;
}

CheckReport suite_noether(std::uint64_t seed) {
  CheckReport rep{"noether", seed, {}};

  LatticeSpec spec;
  spec.sites = 64;
  spec.epsilon = 0.5;
  spec.mass = 0.4;

  // off-shell comparison: the generic Noether formula against the closed
  // form, on a history with no equations of motion imposed
  const FieldHistory off = random_history(spec, 6, seed);
  const CurrentField numeric = noether_current_numeric(
      dqw_density(spec), u1_phase_transformation(), off);
  const CurrentField closed = closed_form_u1_current(off);
  rep.items.push_back(
      at_most("numeric_vs_closed_form", max_abs_diff(numeric, closed), 1e-8));

  const FieldHistory on = walk_history(spec, 64, seed + 1);
  rep.items.push_back(at_most(
      "on_shell_divergence",
      max_divergence(closed_form_u1_current(on)), 1e-12));

  const FieldHistory longrun = walk_history(spec, 501, seed + 2);
  const std::vector<double> q = total_charge(closed_form_u1_current(longrun));
  double drift = 0.0;
  for (double v : q) drift = std::max(drift, std::abs(v - q[0]));
  rep.items.push_back(
      at_most("charge_conservation_500_steps", drift, 1e-12));

  // gauged current conservation on a gauged-walk history
  LatticeSpec gspec = spec;
  gspec.charge = 0.7;
  const int slices = 32;
  const GaugeField gauge =
      static_a1_field(gspec, slices, seed + 3, 0.5, 0.0);
  const WalkOperator walk = build_dirac_walk(gspec);
  FieldHistory gh;
  gh.spec = gspec;
  gh.slices.push_back(random_spinor_field(gspec, seed + 4));
  for (int j = 0; j + 1 < slices; ++j)
    gh.slices.push_back(gauged_walk_step(walk, gauge, j, gh.slices[j]));
  rep.items.push_back(at_most(
      "gauged_on_shell_divergence",
      max_divergence(closed_form_u1_current(gh, &gauge)), 1e-12));
  return rep;
}

CheckReport suite_appendix_b(std::uint64_t seed) {
  CheckReport rep{"appendixB", seed, {}};

  LatticeSpec spec;
  spec.sites = 24;
  spec.epsilon = 0.7;
  spec.mass = 0.6;

  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const FieldHistory h = random_history(spec, 8, seed + trial);
    const cplx asym = action_asymmetric(h).value;
    const cplx sym = action_symmetric(h).value;
    const cplx bnd = boundary_terms(h).total();
    const double scale =
        std::max({1.0, std::abs(asym), std::abs(sym), std::abs(bnd)});
    worst = std::max(worst, std::abs(asym - sym - bnd) / scale);
  }
  rep.items.push_back(
      at_most("asym_equals_sym_plus_boundary", worst, 1e-12));

  // numeric dS_asym/dpsid_n against eps^2 (i d_0 - H) psi_n
  const FieldHistory h = random_history(spec, 8, seed + 100);
  const double eps = spec.epsilon;
  const double mu = mu_eps(eps * spec.mass);
  const Mat2 alpha1{1.0, 0.0, 0.0, -1.0};
  const Mat2 alpha0{0.0, 1.0, 1.0, 0.0};
  double grad_defect = 0.0;
  for (int j : {1, 3, 6})
    for (int p : {1, 11, 22}) {
      Spinor grad;
      for (int comp = 0; comp < 2; ++comp) {
        FieldHistory v = h;
        cplx& entry = comp == 0 ? v.slices[j][p].up : v.slices[j][p].dn;
        const cplx base = entry;
        const double step = 1e-6;
        auto eval = [&](cplx z) {
          entry = z;
          return action_asymmetric(v).value;
        };
        const cplx dre = (eval(base + step) - eval(base - step)) / (2 * step);
        const cplx dim =
            (eval(base + I * step) - eval(base - I * step)) / (2 * step);
        // dS/dpsid = (dS/dRe + i dS/dIm)/2 since psid = conj(psi)
        const cplx g = 0.5 * (dre + I * dim);
        (comp == 0 ? grad.up : grad.dn) = g;
      }
      const Spinor d0 = (1.0 / (2.0 * eps)) *
                        (h.at(j + 1)[p] - h.at(j - 1)[p]);
      const Spinor d1 = (1.0 / (2.0 * eps)) * (h.at(j)[p + 1] - h.at(j)[p - 1]);
      const Spinor expected =
          (eps * eps) * (I * d0 + (I * mu) * (alpha1 * d1) -
                         (spec.mass * mu) * (alpha0 * h.at(j)[p]));
      grad_defect = std::max(grad_defect, (grad - expected).max_abs());
    }
  rep.items.push_back(
      at_most("asym_gradient_matches_eom", grad_defect, 1e-8));

  // on-shell Euler-Lagrange residual of the symmetric density
  LatticeSpec wspec = spec;
  wspec.sites = 32;
  const FieldHistory on = walk_history(wspec, 10, seed + 200);
  const LagrangianDensity density = dqw_density(wspec);
  double el = 0.0;
  for (int j : {1, 4, 8})
    for (int p : {1, 15, 30})
      el = std::max(
          el, euler_lagrange_residual(density, on, j, p).psid_branch.max_abs());
  rep.items.push_back(at_most("symmetric_el_on_shell", el, 1e-9));
  return rep;
}

CheckReport suite_gauging_order(std::uint64_t seed) {
  CheckReport rep{"gauging_order", seed, {}};

  LatticeSpec spec;
  spec.sites = 48;
  spec.epsilon = 0.8;
  spec.mass = 0.35;
  spec.charge = 0.9;
  const WalkOperator walk = build_dirac_walk(spec);
  const SpinorField psi = random_spinor_field(spec, seed);

  const GaugeField commuting = static_a1_field(spec, 3, seed + 1, 0.6, 0.3);
  const GaugingOrderReport ok =
      gauging_order_comparison(walk, commuting, psi);
  rep.items.push_back(
      at_most("commutes_for_uniform_a0", ok.disagreement, 1e-12));

  GaugeField varying = static_a1_field(spec, 3, seed + 2, 0.6, 0.0);
  for (int j = 0; j < 3; ++j)
    for (int p = 0; p < spec.sites; ++p)
      varying.a0[j][p] = std::sin(2.0 * kPi * p / spec.sites);
  const GaugingOrderReport bad =
      gauging_order_comparison(walk, varying, psi);
  rep.items.push_back(
      at_least("fails_for_varying_a0", bad.disagreement, 1e-6));

  // gauge invariance of the action, plaquettes, field strength, current
  const int slices = 6;
  double act_defect = 0.0, plaq_defect = 0.0, f_defect = 0.0,
         cur_defect = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    FieldHistory h = random_history(spec, slices, seed + 10 + trial);
    GaugeField g = random_gauge_field(spec, slices, seed + 50 + trial, 0.8);
    const cplx s_before = action_symmetric(h, &g).value;
    const CurrentField cur_before = closed_form_u1_current(h, &g);
    std::vector<cplx> plaq_before;
    std::vector<double> f_before;
    for (int j = 0; j + 1 < slices; ++j)
      for (int p = 0; p < spec.sites; ++p) {
        plaq_before.push_back(plaquette(g, j, p, 0, 1));
        f_before.push_back(field_strength(g, j, p, 0, 1));
      }

    apply_gauge_transformation(
        h, g, random_gauge_transformation(spec, slices, seed + 90 + trial,
                                          1.5));
    act_defect = std::max(
        act_defect, std::abs(action_symmetric(h, &g).value - s_before));
    cur_defect = std::max(
        cur_defect, max_abs_diff(closed_form_u1_current(h, &g), cur_before));
    int idx = 0;
    for (int j = 0; j + 1 < slices; ++j)
      for (int p = 0; p < spec.sites; ++p, ++idx) {
        plaq_defect = std::max(
            plaq_defect, std::abs(plaquette(g, j, p, 0, 1) -
                                  plaq_before[idx]));
        f_defect = std::max(f_defect, std::abs(field_strength(g, j, p, 0, 1) -
                                               f_before[idx]));
      }
  }
  rep.items.push_back(at_most("action_gauge_invariance", act_defect, 1e-12));
  rep.items.push_back(
      at_most("plaquette_gauge_invariance", plaq_defect, 1e-12));
  rep.items.push_back(
      at_most("field_strength_gauge_invariance", f_defect, 1e-12));
  rep.items.push_back(at_most("current_gauge_invariance", cur_defect, 1e-12));
  return rep;
}

CheckReport suite_maxwell_oracle(std::uint64_t seed) {
  CheckReport rep{"maxwell_oracle", seed, {}};

  LatticeSpec spec;
  spec.sites = 20;
  spec.epsilon = 0.6;
  spec.mass = 0.5;
  spec.charge = 0.8;
  const int slices = 8;
  const FieldHistory h = random_history(spec, slices, seed);
  const GaugeField g = smooth_gauge_field(spec, slices, seed + 1, 0.7);
  double defect = 0.0;
  for (int mu = 0; mu < 2; ++mu)
    for (int j : {1, 3, 6})
      for (int p : {1, 9, 18})
        defect = std::max(
            defect, std::abs(gauge_el_residual_numeric(h, g, j, p, mu) -
                             maxwell_el_residual_closed(h, g, j, p, mu)));
  rep.items.push_back(
      at_most("el_numeric_vs_closed_form", defect, 1e-8));

  // gauge invariance of the pure-gauge action, 1+1D and 3+1D
  double sg_defect = 0.0;
  for (auto extent : {std::vector<int>{6, 6}, std::vector<int>{4, 4, 4, 4}}) {
    GaugeLattice lat = smooth_gauge_lattice(extent, 0.5, 0.8, seed + 2, 0.9);
    const double before = gauge_action(lat);
    std::mt19937_64 rng(seed + 3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> phi(lat.volume());
    for (double& v : phi) v = dist(rng);
    for (int mu = 0; mu < lat.dirs(); ++mu)
      for (int n = 0; n < lat.volume(); ++n)
        lat.a[mu][n] -= (phi[lat.neighbor(n, mu, +1)] - phi[n]) / lat.epsilon;
    sg_defect = std::max(sg_defect, std::abs(gauge_action(lat) - before));
  }
  rep.items.push_back(
      at_most("gauge_action_gauge_invariance", sg_defect, 1e-12));

  // solve the Gauss constraint for a zero-net-charge density, then check
  // its residual
  LatticeSpec mspec;
  mspec.sites = 32;
  mspec.epsilon = 0.5;
  mspec.charge = 0.4;
  std::mt19937_64 rng(seed + 4);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> j0(mspec.sites);
  double mean = 0.0;
  for (double& v : j0) mean += (v = dist(rng));
  mean /= mspec.sites;
  for (double& v : j0) v -= mean;
  const ElectricField1p1 e = gauss_solve(j0, mspec, 0.1);
  double gres = 0.0;
  for (double r : gauss_residual(e, j0, mspec)) gres = std::max(gres,
                                                                std::abs(r));
  rep.items.push_back(at_most("gauss_solve_residual", gres, 1e-12));

  // Ampere reference value: q eps^2 = 0.1, q^2 eps^2 J1 = 0.05 from rest
  LatticeSpec aspec;
  aspec.sites = 4;
  aspec.epsilon = 1.0;
  aspec.charge = 0.1;
  const std::vector<double> j1(4, 0.05 / (0.1 * 0.1));
  const ElectricField1p1 e1 =
      ampere_update(ElectricField1p1(4, 0.0), j1, aspec);
  rep.items.push_back(at_most(
      "ampere_reference_value",
      std::abs(e1[0] - std::asin(-0.05) / 0.1), 1e-15));

  bool saturated = false;
  try {
    ampere_update(ElectricField1p1(4, 0.0), std::vector<double>(4, 200.0),
                  aspec);
  } catch (const SaturationError&) {
    saturated = true;
  }
  rep.items.push_back({"saturation_raises_error", saturated ? 0.0 : 1.0, 0.0,
                       "error raised", saturated});

  // coupled run: Gauss preservation and matter unitarity
  LatticeSpec cspec;
  cspec.sites = 128;
  cspec.epsilon = 1.0;
  cspec.mass = 0.2;
  cspec.charge = 0.1;  // q^2 eps^2 = 0.01
  CoupledOptions opt;
  opt.steps = 500;
  const CoupledResult run = coupled_evolve(
      cspec, gaussian_packet(cspec, cspec.sites / 2.0, 8.0, 0.3), opt);
  const double n0 = field_norm(run.history.at(0), cspec);
  double norm_drift = 0.0, gauss_max = 0.0;
  for (const auto& rec : run.records) {
    norm_drift = std::max(norm_drift, std::abs(rec.norm - n0));
    gauss_max = std::max(gauss_max, rec.max_gauss_residual);
  }
  rep.items.push_back(
      at_most("coupled_norm_preservation", norm_drift, 1e-12));
  rep.items.push_back(
      at_most("coupled_gauss_preservation", gauss_max, 1e-10));
  return rep;
}

double dispersion_error(double eps, double mass, double kmax, int kn) {
  LatticeSpec spec;
  spec.epsilon = eps;
  spec.mass = mass;
  double worst = 0.0;
  for (int i = 0; i <= kn; ++i) {
    const double k = -kmax + 2.0 * kmax * i / kn;
    worst = std::max(worst, std::abs(dispersion(k, spec) -
                                     std::sqrt(k * k + mass * mass)));
  }
  return worst;
}

// S_G on A_1(t) = a sin(2 pi t / T), uniform in space, everything else zero.
double uniform_e_gauge_action(int dirs, double eps, double q, double t_phys,
                              double l_phys, double amp) {
  std::vector<int> extent(dirs, static_cast<int>(std::lround(l_phys / eps)));
  extent[0] = static_cast<int>(std::lround(t_phys / eps));
  GaugeLattice lat = GaugeLattice::zero(extent, eps, q);
  for (int n = 0; n < lat.volume(); ++n) {
    // leading coordinate varies slowest in the flattened index
    int block = 1;
    for (int d = 1; d < dirs; ++d) block *= extent[d];
    const int t = n / block;
    lat.a[1][n] = amp * std::sin(2.0 * kPi * t / extent[0]);
  }
  return gauge_action(lat);
}

CheckReport suite_continuum(std::uint64_t seed) {
  CheckReport rep{"continuum", seed, {}};

  const double mass = 0.5;
  const double eps = 0.4;
  const double kmax = kPi / (4.0 * eps);
  const double coarse = dispersion_error(eps, mass, kmax, 64);
  const double fine = dispersion_error(eps / 2.0, mass, kmax, 64);
  rep.items.push_back(
      in_band("dispersion_refinement_ratio", coarse / fine, 3.0, 5.0));

  LatticeSpec massless;
  massless.epsilon = 0.5;
  massless.mass = 0.0;
  double exact_defect = 0.0;
  for (int i = 1; i < 32; ++i) {
    const double k = 0.49 * kPi / massless.epsilon * i / 32.0;
    exact_defect = std::max(
        exact_defect, std::abs(dispersion(k, massless) - std::abs(k)));
  }
  rep.items.push_back(
      at_most("massless_dispersion_exact", exact_defect, 1e-12));

  // uniform-E profile with closed-form continuum action
  //   S_cont = (1/2) integral E^2 = a^2 pi^2 V_space / T
  const double t_phys = 8.0, l_phys = 8.0, amp = 0.5, q = 0.5;
  for (int dirs : {2, 4}) {
    const double vol = std::pow(l_phys, dirs - 1);
    const double s_cont = amp * amp * kPi * kPi * vol / t_phys;
    const double h = dirs == 2 ? 0.25 : 0.5;
    const double d_coarse = std::abs(
        uniform_e_gauge_action(dirs, h, q, t_phys, l_phys, amp) - s_cont);
    const double d_fine = std::abs(
        uniform_e_gauge_action(dirs, h / 2.0, q, t_phys, l_phys, amp) -
        s_cont);
    rep.items.push_back(in_band(dirs == 2
                                    ? "gauge_action_refinement_1p1"
                                    : "gauge_action_refinement_3p1",
                                d_coarse / d_fine, 3.0, 5.0));
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {
      "unitarity",    "noether",        "appendixB",
      "gauging_order", "maxwell_oracle", "continuum"};
  return names;
}

CheckReport run_check_suite(const std::string& name, std::uint64_t seed) {
  if (name == "unitarity") return suite_unitarity(seed);
  if (name == "noether") return suite_noether(seed);
  if (name == "appendixB") return suite_appendix_b(seed);
  if (name == "gauging_order") return suite_gauging_order(seed);
  if (name == "maxwell_oracle") return suite_maxwell_oracle(seed);
  if (name == "continuum") return suite_continuum(seed);
  throw std::invalid_argument("unknown check suite: " + name);
}

}  // namespace lgt
