#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgt/actions.hpp"
#include "lgt/random_fields.hpp"

using namespace lgt;

namespace {

LatticeSpec make_spec(int sites, double eps, double mass) {
  LatticeSpec s;
  s.sites = sites;
  s.epsilon = eps;
  s.mass = mass;
  return s;
}

}  // namespace

TEST_CASE("actions vanish on the zero field") {
  const LatticeSpec spec = make_spec(12, 0.5, 0.7);
  FieldHistory h;
  h.spec = spec;
  h.slices.assign(5, SpinorField(12));
  CHECK(std::abs(action_asymmetric(h).value) == 0.0);
  CHECK(std::abs(action_symmetric(h).value) == 0.0);
  CHECK(std::abs(boundary_terms(h).total()) == 0.0);
}

TEST_CASE("too few slices is rejected") {
  FieldHistory h;
  h.spec = make_spec(8, 1.0, 0.0);
  h.slices.assign(2, SpinorField(8));
  CHECK_THROWS_AS(action_asymmetric(h), std::invalid_argument);
  CHECK_THROWS_AS(action_symmetric(h), std::invalid_argument);
}

TEST_CASE("asymmetric action nearly vanishes on shell") {
  const LatticeSpec spec = make_spec(64, 0.5, 0.3);
  FieldHistory h;
  h.spec = spec;
  h.slices.push_back(plane_wave(spec, 2.0 * 3.14159265358979 /
                                          (64 * spec.epsilon) * 4));
  const WalkOperator w = build_dirac_walk(spec);
  for (int j = 0; j < 8; ++j)
    h.slices.push_back(walk_step(w, h.slices[j], spec));
  CHECK(std::abs(action_asymmetric(h).value) < 1e-10);
}

TEST_CASE("asymmetric action is generally complex off shell") {
  const LatticeSpec spec = make_spec(16, 0.8, 0.5);
  const FieldHistory h = random_history(spec, 6, 5);
  const ActionValue s = action_asymmetric(h);
  CHECK_FALSE(s.is_real_expected);
  CHECK(std::abs(s.value.imag()) > 1e-6);
}

TEST_CASE("symmetric action is real") {
  const LatticeSpec spec = make_spec(20, 0.6, 0.4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ActionValue s =
        action_symmetric(random_history(spec, 7, seed));
    CHECK(s.is_real_expected);
    CHECK(std::abs(s.value.imag()) <=
          1e-12 * (1.0 + std::abs(s.value.real())));
  }
}

TEST_CASE("asymmetric action splits into symmetric action plus boundary") {
  const LatticeSpec spec = make_spec(18, 0.9, 0.35);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FieldHistory h = random_history(spec, 7, seed);
    const cplx asym = action_asymmetric(h).value;
    const cplx sym = action_symmetric(h).value;
    const cplx bnd = boundary_terms(h).total();
    const double scale =
        std::max({1.0, std::abs(asym), std::abs(sym), std::abs(bnd)});
    CHECK(std::abs(asym - sym - bnd) / scale < 1e-12);
  }
}

TEST_CASE("boundary terms vanish for fields supported away from the edges") {
  const LatticeSpec spec = make_spec(16, 1.0, 0.3);
  FieldHistory h;
  h.spec = spec;
  h.slices.assign(6, SpinorField(16));
  // populate only sites whose boundary sums never touch them
  for (int j = 2; j <= 3; ++j)
    for (int p = 3; p <= 12; ++p) h.slices[j][p] = {cplx(0.4, -0.2), 0.1};
  CHECK(std::abs(boundary_terms(h).total()) == 0.0);
}

TEST_CASE("density summed over the interior reproduces the action") {
  const LatticeSpec spec = make_spec(14, 0.75, 0.45);
  const FieldHistory h = random_history(spec, 6, 77);
  const LagrangianDensity d = dqw_density(spec);
  cplx sum = 0.0;
  for (int j = 1; j <= 4; ++j)
    for (int p = 1; p <= 12; ++p) sum += d.eval(density_args(h, j, p));
  CHECK(std::abs(sum - action_symmetric(h).value) < 1e-12);
}

TEST_CASE("density is linear in each conjugate-pair slot") {
  const LatticeSpec spec = make_spec(8, 0.5, 0.6);
  const LagrangianDensity d = dqw_density(spec);
  const FieldHistory h = random_history(spec, 4, 1);
  DensityArgs a = density_args(h, 1, 3);
  DensityArgs b = a;
  b.psi = 2.0 * a.psi;  // scale psi only, psid untouched
  DensityArgs ab = a;
  ab.psi = a.psi + b.psi;
  CHECK(std::abs(d.eval(ab) + d.eval(DensityArgs{a.j, a.p, Spinor{}, a.psi_t,
                                                 a.psi_x, a.psid, a.psid_t,
                                                 a.psid_x}) -
                 d.eval(a) - d.eval(b)) < 1e-12);
}

TEST_CASE("numeric gradient of the asymmetric action matches the EOM") {
  const LatticeSpec spec = make_spec(16, 0.7, 0.5);
  const FieldHistory h = random_history(spec, 6, 13);
  const double eps = spec.epsilon;
  const double mu = mu_eps(eps * spec.mass);
  const Mat2 alpha1{1.0, 0.0, 0.0, -1.0};
  const Mat2 alpha0{0.0, 1.0, 1.0, 0.0};
  for (int j : {1, 2, 4})
    for (int p : {1, 7, 14}) {
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
        (comp == 0 ? grad.up : grad.dn) = 0.5 * (dre + I * dim);
      }
      const Spinor d0 =
          (1.0 / (2.0 * eps)) * (h.at(j + 1)[p] - h.at(j - 1)[p]);
      const Spinor d1 =
          (1.0 / (2.0 * eps)) * (h.at(j)[p + 1] - h.at(j)[p - 1]);
      // eps^2 (i d_0 - H) psi with H = tilde_alpha^1 (-i d_1) + m tilde_a^0
      const Spinor expected =
          (eps * eps) * (I * d0 + (I * mu) * (alpha1 * d1) -
                         (spec.mass * mu) * (alpha0 * h.at(j)[p]));
      CHECK((grad - expected).max_abs() < 1e-8);
    }
}

TEST_CASE("Euler-Lagrange residual vanishes on walk-generated histories") {
  const LatticeSpec spec = make_spec(24, 0.6, 0.4);
  const FieldHistory h = walk_history(spec, 8, 3);
  const LagrangianDensity d = dqw_density(spec);
  for (int j : {1, 3, 6})
    for (int p : {1, 10, 22}) {
      const ElResidual r = euler_lagrange_residual(d, h, j, p);
      CHECK(r.psid_branch.max_abs() < 1e-9);
      CHECK(r.psi_branch.max_abs() < 1e-9);
    }
}

TEST_CASE("perturbing one site off shell raises the residual there") {
  const LatticeSpec spec = make_spec(24, 0.6, 0.4);
  FieldHistory h = walk_history(spec, 8, 3);
  h.slices[3][10].up += 1e-3;
  const LagrangianDensity d = dqw_density(spec);
  CHECK(euler_lagrange_residual(d, h, 3, 10).psid_branch.max_abs() > 1e-6);
}

TEST_CASE("constant-field residual reproduces the mass term") {
  const LatticeSpec spec = make_spec(12, 1.0, 0.8);
  const double mu = mu_eps(spec.mass);
  FieldHistory h;
  h.spec = spec;
  const Spinor v{cplx(0.3, -0.1), cplx(-0.7, 0.2)};
  h.slices.assign(5, SpinorField(12));
  for (auto& slice : h.slices)
    for (auto& s : slice.values) s = v;
  const LagrangianDensity d = dqw_density(spec);
  const ElResidual r = euler_lagrange_residual(d, h, 2, 5);
  // all difference terms cancel; only -eps^2 m mu alpha^0 psi survives
  const Mat2 alpha0{0.0, 1.0, 1.0, 0.0};
  const Spinor expected =
      (-spec.epsilon * spec.epsilon * spec.mass * mu) * (alpha0 * v);
  CHECK((r.psid_branch - expected).max_abs() < 1e-9);
}

TEST_CASE("gauged density on a temporal-gauge gauged-walk history is on shell") {
  LatticeSpec spec = make_spec(20, 0.8, 0.3);
  spec.charge = 0.6;
  const GaugeField gauge = static_a1_field(spec, 8, 17, 0.5, 0.0);
  const WalkOperator w = build_dirac_walk(spec);
  FieldHistory h;
  h.spec = spec;
  h.slices.push_back(random_spinor_field(spec, 18));
  for (int j = 0; j < 7; ++j)
    h.slices.push_back(gauged_walk_step(w, gauge, j, h.slices[j]));
  const LagrangianDensity d = dqw_density(spec, &gauge);
  for (int j : {1, 3, 6})
    for (int p : {1, 9, 18})
      CHECK(euler_lagrange_residual(d, h, j, p).psid_branch.max_abs() < 1e-9);
}

TEST_CASE("the two EL branches are reported independently") {
  const LatticeSpec spec = make_spec(10, 0.5, 0.5);
  const FieldHistory h = random_history(spec, 5, 2);
  const ElResidual r =
      euler_lagrange_residual(dqw_density(spec), h, 2, 4);
  // off shell both branches are nonzero; conjugacy is measured, not assumed
  CHECK(r.psid_branch.max_abs() > 1e-6);
  CHECK(r.psi_branch.max_abs() > 1e-6);
  const Spinor conj_psi{std::conj(r.psi_branch.up),
                        std::conj(r.psi_branch.dn)};
  CHECK((r.psid_branch - conj_psi).max_abs() < 1e-9);
}
