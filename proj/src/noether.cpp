#include "lgt/noether.hpp"

namespace lgt {

namespace {

inline int wrap(int p, int P) { return ((p % P) + P) % P; }

inline cplx rdot(const Spinor& row, const Spinor& s) {
  return row.up * s.up + row.dn * s.dn;
}

}  // namespace

Spinor InternalTransformation::generator_at(const Spinor& psi) const {
  if (generator) return generator(psi);
  const double h = 1e-6;
  const Spinor plus = f(psi, h);
  const Spinor minus = f(psi, -h);
  return (1.0 / (2.0 * h)) * (plus - minus);
}

InternalTransformation u1_phase_transformation() {
  InternalTransformation t;
  t.f = [](const Spinor& psi, double alpha) {
    return std::exp(I * alpha) * psi;
  };
  t.generator = [](const Spinor& psi) { return I * psi; };
  return t;
}

CurrentField noether_current_numeric(const LagrangianDensity& density,
                                     const InternalTransformation& transform,
                                     const FieldHistory& history) {
  const LatticeSpec& spec = history.spec;
  const int P = spec.sites;
  const int J = history.num_slices();
  CurrentField out;
  out.spec = spec;
  out.j0.assign(J - 1, std::vector<double>(P, 0.0));
  out.j1.assign(J - 1, std::vector<double>(P, 0.0));

  for (int j = 0; j < J - 1; ++j) {
    for (int p = 0; p < P; ++p) {
      const DensityArgs args = density_args(history, j, p);
      const Spinor c_t = transform.generator_at(args.psi_t);
      const Spinor c_x = transform.generator_at(args.psi_x);
      const Spinor cd_t = {std::conj(c_t.up), std::conj(c_t.dn)};
      const Spinor cd_x = {std::conj(c_x.up), std::conj(c_x.dn)};

      const Spinor dpsi_t =
          density_gradient(density, args, DensitySlot::psi_t);
      const Spinor dpsid_t =
          density_gradient(density, args, DensitySlot::psid_t);
      const Spinor dpsi_x =
          density_gradient(density, args, DensitySlot::psi_x);
      const Spinor dpsid_x =
          density_gradient(density, args, DensitySlot::psid_x);

      // minus sign: continuum charge-current convention
      const cplx j0 = -(rdot(dpsi_t, c_t) + rdot(cd_t, dpsid_t));
      const cplx j1 = -(rdot(dpsi_x, c_x) + rdot(cd_x, dpsid_x));
      out.j0[j][p] = j0.real();
      out.j1[j][p] = j1.real();
    }
  }
  return out;
}

CurrentField closed_form_u1_current(const FieldHistory& history,
                                    const GaugeField* gauge) {
  const LatticeSpec& spec = history.spec;
  const int P = spec.sites;
  const int J = history.num_slices();
  const double eps = spec.epsilon;
  const double q = spec.charge;
  const double mu = mu_eps(eps * spec.mass);
  const Mat2 alpha1{1.0, 0.0, 0.0, -1.0};

  CurrentField out;
  out.spec = spec;
  out.j0.assign(J - 1, std::vector<double>(P, 0.0));
  out.j1.assign(J - 1, std::vector<double>(P, 0.0));
  for (int j = 0; j < J - 1; ++j) {
    const SpinorField& cur = history.at(j);
    const SpinorField& next = history.at(j + 1);
    for (int p = 0; p < P; ++p) {
      cplx u0 = 1.0, u1 = 1.0;
      if (gauge) {
        u0 = std::exp(I * q * eps * gauge->a0[j][p]);
        u1 = std::exp(I * q * eps * gauge->a1[j][p]);
      }
      // J^0 = eps Re(U_0 psi^dag_n psi_{n+0}),
      // J^1 = eps mu Re(U_1 psi^dag_n alpha^1 psi_{n+1})
      out.j0[j][p] = eps * (u0 * cdot(cur[p], next[p])).real();
      out.j1[j][p] =
          eps * mu * (u1 * cdot(cur[p], alpha1 * cur[wrap(p + 1, P)])).real();
    }
  }
  return out;
}

std::vector<std::vector<double>> lattice_divergence(
    const CurrentField& current) {
  const int P = current.spec.sites;
  const double eps = current.spec.epsilon;
  const int T = current.time_extent();
  std::vector<std::vector<double>> div;
  div.assign(T - 1, std::vector<double>(P, 0.0));
  for (int j = 1; j < T; ++j)
    for (int p = 0; p < P; ++p)
      div[j - 1][p] = (current.j0[j][p] - current.j0[j - 1][p]) / eps +
                      (current.j1[j][p] - current.j1[j][wrap(p - 1, P)]) / eps;
  return div;
}

double max_divergence(const CurrentField& current) {
  double m = 0.0;
  for (const auto& row : lattice_divergence(current))
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> total_charge(const CurrentField& current) {
  std::vector<double> q(current.time_extent(), 0.0);
  for (int j = 0; j < current.time_extent(); ++j)
    for (double v : current.j0[j]) q[j] += v;
  return q;
}

}  // namespace lgt
