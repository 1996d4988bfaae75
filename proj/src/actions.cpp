#include "lgt/actions.hpp"

namespace lgt {

namespace {

inline int wrap(int p, int P) { return ((p % P) + P) % P; }

// row . s without conjugation; the row already holds conjugated values.
inline cplx rdot(const Spinor& row, const Spinor& s) {
  return row.up * s.up + row.dn * s.dn;
}

inline Spinor conj_spinor(const Spinor& s) {
  return {std::conj(s.up), std::conj(s.dn)};
}

}  // namespace

DensityArgs density_args(const FieldHistory& history, int j, int p) {
  const int P = history.spec.sites;
  DensityArgs a;
  a.j = j;
  a.p = p;
  a.psi = history.at(j)[p];
  a.psi_t = history.at(j + 1)[p];
  a.psi_x = history.at(j)[wrap(p + 1, P)];
  a.psid = conj_spinor(a.psi);
  a.psid_t = conj_spinor(a.psi_t);
  a.psid_x = conj_spinor(a.psi_x);
  return a;
}

LagrangianDensity dqw_density(const LatticeSpec& spec,
                              const GaugeField* gauge) {
  const double eps = spec.epsilon;
  const double m = spec.mass;
  const double q = spec.charge;
  const double mu = mu_eps(eps * m);
  const Mat2 alpha1{1.0, 0.0, 0.0, -1.0};
  const Mat2 alpha0{0.0, 1.0, 1.0, 0.0};
  // copy of the gauge slices so the density stays valid on its own
  const GaugeField g = gauge ? *gauge : GaugeField{};
  const bool gauged = gauge != nullptr;

  LagrangianDensity d;
  d.needs_gauge = gauged;
  d.eval = [=](const DensityArgs& a) -> cplx {
    cplx u0 = 1.0, u1 = 1.0;
    if (gauged) {
      u0 = std::exp(I * q * eps * g.a0[a.j][a.p]);
      u1 = std::exp(I * q * eps * g.a1[a.j][a.p]);
    }
    const cplx fwd = (0.5 * I * eps) *
                     (u0 * rdot(a.psid, a.psi_t) +
                      mu * u1 * rdot(a.psid, alpha1 * a.psi_x));
    const cplx bwd = (-0.5 * I * eps) *
                     (std::conj(u0) * rdot(a.psid_t, a.psi) +
                      mu * std::conj(u1) * rdot(a.psid_x, alpha1 * a.psi));
    const cplx mass = -eps * eps * m * mu * rdot(a.psid, alpha0 * a.psi);
    return fwd + bwd + mass;
  };
  return d;
}

ActionValue action_asymmetric(const FieldHistory& history) {
  const LatticeSpec& spec = history.spec;
  if (history.num_slices() < 3)
    throw std::invalid_argument("action needs at least 3 time slices");
  const int P = spec.sites;
  const int J = history.num_slices();
  const double eps = spec.epsilon;
  const double mu = mu_eps(eps * spec.mass);
  const Mat2 alpha1{1.0, 0.0, 0.0, -1.0};
  const Mat2 alpha0{0.0, 1.0, 1.0, 0.0};

  cplx s = 0.0;
  for (int j = 1; j <= J - 2; ++j) {
    const SpinorField& prev = history.at(j - 1);
    const SpinorField& cur = history.at(j);
    const SpinorField& next = history.at(j + 1);
    for (int p = 1; p <= P - 2; ++p) {
      // psibarbar (i gamma~^mu d_mu - m) psi
      //   = psi^dag [ i d_0 + i mu alpha^1 d_1 - m mu alpha^0 ] psi
      const Spinor d0 = (1.0 / (2.0 * eps)) * (next[p] - prev[p]);
      const Spinor d1 = (1.0 / (2.0 * eps)) * (cur[p + 1] - cur[p - 1]);
      const Spinor bulk = I * d0 + (I * mu) * (alpha1 * d1) -
                          (spec.mass * mu) * (alpha0 * cur[p]);
      s += cdot(cur[p], bulk);
    }
  }
  return {eps * eps * s, false};
}

ActionValue action_symmetric(const FieldHistory& history,
                             const GaugeField* gauge) {
  const LatticeSpec& spec = history.spec;
  if (history.num_slices() < 3)
    throw std::invalid_argument("action needs at least 3 time slices");
  if (gauge && (gauge->spec.sites != spec.sites ||
                static_cast<int>(gauge->a0.size()) < history.num_slices()))
    throw std::invalid_argument("gauge field extent mismatch");
  const int P = spec.sites;
  const int J = history.num_slices();
  const LagrangianDensity density = dqw_density(spec, gauge);

  cplx s = 0.0;
  for (int j = 1; j <= J - 2; ++j)
    for (int p = 1; p <= P - 2; ++p)
      s += density.eval(density_args(history, j, p));
  return {s, true};
}

BoundaryTerms boundary_terms(const FieldHistory& history) {
  const LatticeSpec& spec = history.spec;
  const int P = spec.sites;
  const int J = history.num_slices();
  const double eps = spec.epsilon;
  const double mu = mu_eps(eps * spec.mass);
  const Mat2 alpha1{1.0, 0.0, 0.0, -1.0};
  const cplx pref = -0.5 * I * eps;

  // B(0): temporal faces j_i and j_f, (gamma~0)^-1 gamma~0 = 1.
  cplx b0 = 0.0;
  for (int p = 1; p <= P - 2; ++p)
    b0 += cdot(history.at(1)[p], history.at(0)[p]) -
          cdot(history.at(J - 1)[p], history.at(J - 2)[p]);
  // B(1): spatial faces, (gamma~0)^-1 gamma~1 = mu_eps alpha^1.
  cplx b1 = 0.0;
  for (int j = 1; j <= J - 2; ++j)
    b1 += mu * (cdot(history.at(j)[1], alpha1 * history.at(j)[0]) -
                cdot(history.at(j)[P - 1], alpha1 * history.at(j)[P - 2]));
  return {pref * b0, pref * b1};
}

Spinor density_gradient(const LagrangianDensity& density,
                        const DensityArgs& args, DensitySlot slot) {
  auto pick = [&](DensityArgs& a) -> Spinor* {
    switch (slot) {
      case DensitySlot::psi: return &a.psi;
      case DensitySlot::psi_t: return &a.psi_t;
      case DensitySlot::psi_x: return &a.psi_x;
      case DensitySlot::psid: return &a.psid;
      case DensitySlot::psid_t: return &a.psid_t;
      case DensitySlot::psid_x: return &a.psid_x;
    }
    return nullptr;
  };

  auto partial = [&](int component) -> cplx {
    DensityArgs a = args;
    cplx* entry =
        component == 0 ? &pick(a)->up : &pick(a)->dn;
    const cplx base = *entry;
    const double h = 1e-5 * (1.0 + std::abs(base));
    if (!(h > 0.0)) throw std::runtime_error("differentiation step underflow");
    auto eval_at = [&](cplx v) {
      *entry = v;
      return density.eval(a);
    };
    const cplx dre =
        (eval_at(base + h) - eval_at(base - h)) / (2.0 * h);
    const cplx dim =
        (eval_at(base + I * h) - eval_at(base - I * h)) / (2.0 * h);
    // Wirtinger d/dz; exact for densities holomorphic in this slot.
    return 0.5 * (dre - I * dim);
  };

  return {partial(0), partial(1)};
}

ElResidual euler_lagrange_residual(const LagrangianDensity& density,
                                   const FieldHistory& history, int j, int p) {
  const int P = history.spec.sites;
  const DensityArgs at_n = density_args(history, j, p);
  const DensityArgs at_nm0 = density_args(history, j - 1, p);
  const DensityArgs at_nm1 = density_args(history, j, wrap(p - 1, P));

  ElResidual r;
  r.psid_branch = density_gradient(density, at_n, DensitySlot::psid) +
                  density_gradient(density, at_nm0, DensitySlot::psid_t) +
                  density_gradient(density, at_nm1, DensitySlot::psid_x);
  r.psi_branch = density_gradient(density, at_n, DensitySlot::psi) +
                 density_gradient(density, at_nm0, DensitySlot::psi_t) +
                 density_gradient(density, at_nm1, DensitySlot::psi_x);
  return r;
}

}  // namespace lgt
