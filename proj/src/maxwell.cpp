#include "lgt/maxwell.hpp"

#include <cmath>
#include <numeric>

namespace lgt {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline int wrap(int p, int P) { return ((p % P) + P) % P; }

// (1/q) sin(q eps^2 F), with the smooth q -> 0 limit eps^2 F.
inline double sin_over_q(double f, double q, double eps) {
  if (q == 0.0) return eps * eps * f;
  return std::sin(q * eps * eps * f) / q;
}

}  // namespace

GaugeLattice GaugeLattice::zero(std::vector<int> extent, double epsilon,
                                double q) {
  GaugeLattice lat;
  lat.extent = std::move(extent);
  lat.epsilon = epsilon;
  lat.q = q;
  lat.validate();
  lat.a.assign(lat.dirs(), std::vector<double>(lat.volume(), 0.0));
  return lat;
}

int GaugeLattice::volume() const {
  int v = 1;
  for (int e : extent) v *= e;
  return v;
}

void GaugeLattice::validate() const {
  if (dirs() != 2 && dirs() != 4)
    throw std::invalid_argument("gauge lattice must be 1+1D or 3+1D");
  for (int e : extent)
    if (e < 2) throw std::invalid_argument("gauge lattice extents must be >= 2");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("lattice.epsilon must be > 0");
}

int GaugeLattice::flat(const std::vector<int>& coords) const {
  int idx = 0;
  for (int mu = 0; mu < dirs(); ++mu)
    idx = idx * extent[mu] + wrap(coords[mu], extent[mu]);
  return idx;
}

int GaugeLattice::neighbor(int flat_index, int mu, int shift) const {
  // strides: last direction varies fastest
  int stride = 1;
  for (int d = dirs() - 1; d > mu; --d) stride *= extent[d];
  const int block = stride * extent[mu];
  const int base = (flat_index / block) * block;
  const int offset = flat_index - base;
  const int coord = offset / stride;
  const int rest = offset - coord * stride;
  return base + wrap(coord + shift, extent[mu]) * stride + rest;
}

double field_strength_nd(const GaugeLattice& lattice, int n, int mu, int nu) {
  const double eps = lattice.epsilon;
  const int n_mu = lattice.neighbor(n, mu, +1);
  const int n_nu = lattice.neighbor(n, nu, +1);
  return ((lattice.a[nu][n_mu] - lattice.a[nu][n]) -
          (lattice.a[mu][n_nu] - lattice.a[mu][n])) /
         eps;
}

namespace {

// Prefactor 1/q^2 in 3+1D and 1/(q^2 eps^2) in 1+1D; returned without the
// 1/q^2, which is folded into the per-plaquette (1 - cos)/q^2 limit.
inline double dimension_norm(int dirs, double eps) {
  return dirs == 2 ? 1.0 / (eps * eps) : 1.0;
}

// (1 - cos(q eps^2 F)) / q^2, with the q -> 0 limit eps^4 F^2 / 2.
inline double one_minus_cos_over_q2(double f, double q, double eps) {
  if (q == 0.0) return 0.5 * eps * eps * eps * eps * f * f;
  const double theta = q * eps * eps * f;
  return (1.0 - std::cos(theta)) / (q * q);
}

}  // namespace

double gauge_action(const GaugeLattice& lattice) {
  lattice.validate();
  const int D = lattice.dirs();
  const double norm = dimension_norm(D, lattice.epsilon);
  double s_time = 0.0, s_space = 0.0;
  for (int n = 0; n < lattice.volume(); ++n) {
    for (int l = 1; l < D; ++l)
      s_time += one_minus_cos_over_q2(field_strength_nd(lattice, n, 0, l),
                                      lattice.q, lattice.epsilon);
    for (int k = 1; k < D; ++k)
      for (int l = k + 1; l < D; ++l)
        s_space -= one_minus_cos_over_q2(field_strength_nd(lattice, n, k, l),
                                         lattice.q, lattice.epsilon);
  }
  return norm * (s_time + s_space);
}

double gauge_action_continuum_reference(const GaugeLattice& lattice) {
  const int D = lattice.dirs();
  const double eps = lattice.epsilon;
  const double norm = dimension_norm(D, eps);
  // -(1/4) F_{mu nu} F^{mu nu} = (1/2)(sum_l F_{0l}^2 - sum_{k<l} F_{kl}^2)
  double s = 0.0;
  for (int n = 0; n < lattice.volume(); ++n) {
    for (int l = 1; l < D; ++l) {
      const double f = field_strength_nd(lattice, n, 0, l);
      s += 0.5 * f * f;
    }
    for (int k = 1; k < D; ++k)
      for (int l = k + 1; l < D; ++l) {
        const double f = field_strength_nd(lattice, n, k, l);
        s -= 0.5 * f * f;
      }
  }
  return norm * eps * eps * eps * eps * s;
}

double gauge_action_1p1(const GaugeField& gauge) {
  const LatticeSpec& spec = gauge.spec;
  const int P = spec.sites;
  const int J = static_cast<int>(gauge.a0.size());
  const double eps = spec.epsilon;
  const double q = spec.charge;
  double s = 0.0;
  for (int j = 0; j <= J - 2; ++j)
    for (int p = 0; p < P; ++p)
      s += one_minus_cos_over_q2(field_strength(gauge, j, p, 0, 1), q, eps);
  return s / (eps * eps);
}

double gauge_el_residual_numeric(const FieldHistory& history,
                                 const GaugeField& gauge, int j, int p,
                                 int mu) {
  const double h = 1e-5;
  GaugeField g = gauge;
  auto total = [&](double value) {
    g.a(mu, j, p) = value;
    return action_symmetric(history, &g).value.real() + gauge_action_1p1(g);
  };
  const double base = gauge.a(mu, j, p);
  return (total(base + h) - total(base - h)) / (2.0 * h);
}

double maxwell_el_residual_closed(const FieldHistory& history,
                                  const GaugeField& gauge, int j, int p,
                                  int mu) {
  const LatticeSpec& spec = history.spec;
  const int P = spec.sites;
  const double eps = spec.epsilon;
  const double q = spec.charge;

  const CurrentField current = closed_form_u1_current(history, &gauge);
  const double matter = -q * eps * (mu == 0 ? current.j0[j][p]
                                            : current.j1[j][p]);

  double gauge_part = 0.0;
  if (mu == 1) {
    // dL_0 [ (1/q) sin(q eps^2 F^{01}) ], F^{01} = -F_{01}
    const double f_here = -field_strength(gauge, j, p, 0, 1);
    const double f_back = -field_strength(gauge, j - 1, p, 0, 1);
    gauge_part = (sin_over_q(f_here, q, eps) - sin_over_q(f_back, q, eps)) /
                 eps;
  } else {
    // dL_1 [ (1/q) sin(q eps^2 F^{10}) ], F^{10} = F_{01}
    const double f_here = field_strength(gauge, j, p, 0, 1);
    const double f_back = field_strength(gauge, j, wrap(p - 1, P), 0, 1);
    gauge_part = (sin_over_q(f_here, q, eps) - sin_over_q(f_back, q, eps)) /
                 eps;
  }
  return matter + gauge_part;
}

std::vector<double> gauss_residual(const ElectricField1p1& e,
                                   const std::vector<double>& j0,
                                   const LatticeSpec& spec) {
  const int P = spec.sites;
  if (static_cast<int>(e.size()) != P || static_cast<int>(j0.size()) != P)
    throw std::invalid_argument("field size mismatch in Gauss residual");
  const double eps = spec.epsilon;
  const double q = spec.charge;
  std::vector<double> r(P, 0.0);
  for (int p = 0; p < P; ++p)
    r[p] = (sin_over_q(e[p], q, eps) - sin_over_q(e[wrap(p - 1, P)], q, eps)) /
               eps -
           q * eps * j0[p];
  return r;
}

ElectricField1p1 gauss_solve(const std::vector<double>& j0,
                             const LatticeSpec& spec, double background_e0) {
  const int P = spec.sites;
  if (static_cast<int>(j0.size()) != P)
    throw std::invalid_argument("charge density size mismatch");
  const double eps = spec.epsilon;
  const double q = spec.charge;
  if (q == 0.0) {
    // Uncharged matter: the constraint decouples and only admits the
    // uniform background field.
    return ElectricField1p1(P, background_e0);
  }
  const double qe2 = q * eps * eps;
  if (std::abs(qe2 * background_e0) > 0.5 * kPi + 1e-12)
    throw SaturationError("background field outside the principal branch",
                          -1, -1);

  const double s_bg = std::sin(qe2 * background_e0);
  std::vector<double> s(P, 0.0);
  double acc = s_bg;
  double scale = std::abs(s_bg);
  for (int p = 0; p < P; ++p) {
    acc += q * q * eps * eps * j0[p];
    s[p] = acc;
    scale = std::max(scale, std::abs(acc));
  }
  // periodic consistency: integrating once around must reproduce sin(q
  // eps^2 E) entering site 0, i.e. the net charge must vanish
  if (std::abs(s[P - 1] - s_bg) > 1e-8 * (1.0 + scale))
    throw GaussConstraintError(
        "Gauss constraint has no periodic solution: net charge " +
        std::to_string((s[P - 1] - s_bg) / (q * q * eps * eps)));

  ElectricField1p1 e(P, 0.0);
  for (int p = 0; p < P; ++p) {
    if (std::abs(s[p]) > 1.0)
      throw SaturationError("Gauss constraint saturated at site " +
                                std::to_string(p) + ": |sin(q eps^2 E)| = " +
                                std::to_string(std::abs(s[p])) + " > 1",
                            -1, p);
    e[p] = std::asin(s[p]) / qe2;
  }
  return e;
}

ElectricField1p1 ampere_update(const ElectricField1p1& e_prev,
                               const std::vector<double>& j1,
                               const LatticeSpec& spec, int step) {
  const int P = spec.sites;
  if (static_cast<int>(e_prev.size()) != P ||
      static_cast<int>(j1.size()) != P)
    throw std::invalid_argument("field size mismatch in Ampere update");
  const double eps = spec.epsilon;
  const double q = spec.charge;
  if (q == 0.0) return e_prev;  // no coupling: the field is frozen

  const double qe2 = q * eps * eps;
  ElectricField1p1 e(P, 0.0);
  for (int p = 0; p < P; ++p) {
    if (std::abs(qe2 * e_prev[p]) > 0.5 * kPi + 1e-12)
      throw SaturationError("electric field outside the principal branch at "
                            "site " + std::to_string(p),
                            step, p);
    const double s = std::sin(qe2 * e_prev[p]) - q * q * eps * eps * j1[p];
    if (std::abs(s) > 1.0)
      throw SaturationError(
          "Ampere update saturated at step " + std::to_string(step) +
              ", site " + std::to_string(p) + ": |sin(q eps^2 E)| = " +
              std::to_string(std::abs(s)) + " > 1",
          step, p);
    e[p] = std::asin(s) / qe2;
  }
  return e;
}

CoupledResult coupled_evolve(const LatticeSpec& spec, const SpinorField& psi0,
                             const CoupledOptions& options) {
  spec.validate();
  if (spec.boundary != Boundary::periodic)
    throw std::invalid_argument(
        "coupled evolution requires periodic boundary");
  if (psi0.sites() != spec.sites)
    throw std::invalid_argument("initial field size mismatch");
  if (options.steps < 1)
    throw std::invalid_argument("evolution.steps must be >= 1");
  if (!options.solve_initial_gauss &&
      static_cast<int>(options.initial_e.size()) != spec.sites)
    throw std::invalid_argument("initial electric field size mismatch");

  const int P = spec.sites;
  const int N = options.steps;
  const double eps = spec.epsilon;
  const double q = spec.charge;
  const double mu = mu_eps(eps * spec.mass);
  const WalkOperator walk = build_dirac_walk(spec);

  CoupledResult result;
  result.history.spec = spec;
  result.history.slices.reserve(N + 1);
  result.history.slices.push_back(psi0);

  // temporal gauge: A_0 = 0 everywhere, A_1 evolves slice by slice
  LatticeSpec gauge_spec = spec;
  gauge_spec.steps = N + 1;
  result.gauge = GaugeField::zero(gauge_spec);

  // The Gauss constraint is transported exactly by sourcing the Ampere
  // update at step j with the link flux of the walk step j-1 -> j.  For the
  // strictly local unitary walk the charge density rho_p = eps |psi_p|^2 and
  // the flux through link (p, p+1),
  //   F_p = eps [ mu^2 (|psi_{p,up}|^2 - |psi_{p+1,down}|^2)
  //               - 2 eps m mu^2 Im( conj(U_p) conj(psi_{p+1,down}) psi_{p,up} ) ],
  // obey rho_{j+1,p} - rho_{j,p} + F_{j,p} - F_{j,p-1} = 0 identically for
  // any link configuration, including links that change between steps.
  const double m = spec.mass;
  const double mu2 = mu * mu;
  ElectricField1p1 e_prev;
  std::vector<double> flux_prev;
  double background = 0.0;
  for (int j = 0; j <= N; ++j) {
    const SpinorField& cur = result.history.slices[j];

    std::vector<double> rho(P, 0.0), flux(P, 0.0);
    for (int p = 0; p < P; ++p) {
      const cplx up = cur[p].up;
      const cplx dn = cur[wrap(p + 1, P)].dn;
      const cplx u1 = std::exp(I * q * eps * result.gauge.a1[j][p]);
      rho[p] = eps * (std::norm(cur[p].up) + std::norm(cur[p].dn));
      flux[p] = eps * (mu2 * (std::norm(up) - std::norm(dn)) -
                       2.0 * eps * m * mu2 *
                           std::imag(std::conj(u1) * std::conj(dn) * up));
    }
    if (j == 0 && options.neutralize_background) {
      for (double v : rho) background += v;
      background /= P;
    }
    // static uniform background: the matter charge is exactly conserved, so
    // subtracting the initial mean keeps the source neutral at every step
    std::vector<double> source = rho;
    for (double& v : source) v -= background;

    ElectricField1p1 e;
    if (j == 0) {
      e = options.solve_initial_gauss
              ? gauss_solve(source, spec, options.background_e0)
              : options.initial_e;
    } else {
      e = ampere_update(e_prev, flux_prev, spec, j);
    }

    CoupledStepRecord rec;
    rec.step = j;
    rec.norm = field_norm(cur, spec);
    rec.total_charge = std::accumulate(rho.begin(), rho.end(), 0.0);
    double g = 0.0;
    for (double r : gauss_residual(e, source, spec))
      g = std::max(g, std::abs(r));
    rec.max_gauss_residual = g;
    result.records.push_back(rec);
    if (options.record_profiles) result.e_history.push_back(e);

    if (j < N) {
      // E^1 = d^R_0 A_1 in temporal gauge: advance the vector potential,
      // then step the matter field through the slice-j links
      for (int p = 0; p < P; ++p)
        result.gauge.a1[j + 1][p] = result.gauge.a1[j][p] + eps * e[p];
      result.history.slices.push_back(
          gauged_walk_step(walk, result.gauge, j, cur));
    }
    e_prev = std::move(e);
    flux_prev = std::move(flux);
  }
  if (!options.record_profiles) result.e_history.push_back(e_prev);
  result.background_density = background;
  return result;
}

}  // namespace lgt
