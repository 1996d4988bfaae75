#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgt/dirac_walk.hpp"
#include "lgt/random_fields.hpp"

using namespace lgt;

namespace {

constexpr double kPi = 3.14159265358979323846;

LatticeSpec make_spec(int sites, double eps, double mass) {
  LatticeSpec s;
  s.sites = sites;
  s.epsilon = eps;
  s.mass = mass;
  return s;
}

}  // namespace

TEST_CASE("normalization prefactor values") {
  CHECK(mu_eps(0.0) == 1.0);
  CHECK(std::abs(mu_eps(0.1) - 0.995037190209989) < 1e-14);
}

TEST_CASE("internal algebra satisfies the Clifford relations") {
  const InternalAlgebra a = make_internal_algebra(0.3);
  auto anticommutator = [](const Mat2& x, const Mat2& y) {
    return x * y + y * x;
  };
  // {gamma^mu, gamma^nu} = 2 eta^{mu nu}, eta = diag(1, -1)
  CHECK((anticommutator(a.gamma0, a.gamma0) - 2.0 * Mat2::identity())
            .max_abs() < 1e-15);
  CHECK((anticommutator(a.gamma1, a.gamma1) + 2.0 * Mat2::identity())
            .max_abs() < 1e-15);
  CHECK(anticommutator(a.gamma0, a.gamma1).max_abs() < 1e-15);
  // {alpha^mu, alpha^nu} = 2 delta^{mu nu}
  CHECK((anticommutator(a.alpha0, a.alpha0) - 2.0 * Mat2::identity())
            .max_abs() < 1e-15);
  CHECK((anticommutator(a.alpha1, a.alpha1) - 2.0 * Mat2::identity())
            .max_abs() < 1e-15);
  CHECK(anticommutator(a.alpha0, a.alpha1).max_abs() < 1e-15);
  // modified operators
  CHECK((a.tilde_alpha0 - a.mu_eps * a.alpha0).max_abs() < 1e-15);
  CHECK((a.tilde_alpha1 - a.mu_eps * a.alpha1).max_abs() < 1e-15);
  CHECK((a.mu_eps * a.tilde_gamma0 - a.gamma0).max_abs() < 1e-15);
  CHECK((a.tilde_gamma1 - a.gamma1).max_abs() < 1e-15);
  // projectors
  CHECK((a.proj_plus * a.proj_plus - a.proj_plus).max_abs() < 1e-15);
  CHECK((a.proj_minus * a.proj_minus - a.proj_minus).max_abs() < 1e-15);
  CHECK((a.proj_plus * a.proj_minus).max_abs() < 1e-15);
  CHECK((a.proj_plus + a.proj_minus - Mat2::identity()).max_abs() < 1e-15);
}

TEST_CASE("Dirac walk jump operators and transport operators") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.5);
  const WalkOperator w = build_dirac_walk(spec);
  const double mu = mu_eps(0.5);
  // w_zero = -i eps m mu alpha^0, entry magnitude 0.4472...
  CHECK(std::abs(std::abs(w.w_zero.m01) - 0.4472135954999579) < 1e-14);
  CHECK(std::abs(w.w_zero.m01 - cplx(0.0, -0.5 * mu)) < 1e-15);
  // b_minus = mu alpha^1, b_plus = mu (Hermitian), m_op = mu (1 - i eps m a0)
  CHECK((w.b_minus() - mu * Mat2{1.0, 0.0, 0.0, -1.0}).max_abs() < 1e-15);
  CHECK((w.b_plus() - mu * Mat2::identity()).max_abs() < 1e-15);
  CHECK((w.b_plus() - w.b_plus().adjoint()).max_abs() < 1e-15);
  CHECK(unitarity_defect(w) < 1e-14);
}

TEST_CASE("wrong-sign prefactor breaks unitarity") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.1);
  const double printed = 1.0 / std::sqrt(1.0 - 0.1 * 0.1);
  CHECK(unitarity_defect(build_walk_with_prefactor(spec, printed)) >= 1e-3);
  CHECK(unitarity_defect(build_dirac_walk(spec)) <= 1e-14);
}

TEST_CASE("massless walk is a conditional shift") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.0);
  const WalkOperator w = build_dirac_walk(spec);
  SpinorField up(8), dn(8);
  up[3].up = 1.0;
  dn[3].dn = 1.0;
  const SpinorField up_out = walk_step(w, up, spec);
  const SpinorField dn_out = walk_step(w, dn, spec);
  // upper component is right-moving, lower is left-moving
  CHECK(std::abs(up_out[4].up - 1.0) < 1e-15);
  CHECK(std::abs(dn_out[2].dn - 1.0) < 1e-15);
  CHECK(up_out.max_abs() == doctest::Approx(1.0));
}

TEST_CASE("massive walk mixes a local component into the shift") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.2);
  const WalkOperator w = build_dirac_walk(spec);
  const double mu = mu_eps(0.2);
  SpinorField psi(8);
  psi[3].dn = 1.0;
  const SpinorField out = walk_step(w, psi, spec);
  CHECK(std::abs(out[2].dn - mu) < 1e-15);
  CHECK(std::abs(out[3].up - cplx(0.0, -0.2 * mu)) < 1e-15);
  CHECK(std::abs(field_norm(out, spec) - field_norm(psi, spec)) < 1e-14);
}

TEST_CASE("walk preserves the norm for a range of masses") {
  for (double em : {0.0, 0.3, 1.0, 2.0}) {
    const LatticeSpec spec = make_spec(64, 1.0, em);
    const WalkOperator w = build_dirac_walk(spec);
    SpinorField psi = random_spinor_field(spec, 42);
    const double n0 = field_norm(psi, spec);
    for (int j = 0; j < 50; ++j) psi = walk_step(w, psi, spec);
    CHECK(std::abs(field_norm(psi, spec) - n0) < 1e-12);
  }
}

TEST_CASE("walk-generated histories satisfy the unitary two-step relation") {
  const LatticeSpec spec = make_spec(48, 0.8, 0.4);
  const FieldHistory h = walk_history(spec, 12, 7);
  for (int j = 1; j <= 10; ++j)
    CHECK(two_step_residual(h, j, TwoStepScheme::unitary).max_abs() < 1e-12);
  // the naive scheme differs on the same history whenever m > 0
  double naive = 0.0;
  for (int j = 1; j <= 10; ++j)
    naive = std::max(naive,
                     two_step_residual(h, j, TwoStepScheme::naive).max_abs());
  CHECK(naive > 1e-3);
}

TEST_CASE("two-step residual needs an interior index and zero maps to zero") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.3);
  FieldHistory h;
  h.spec = spec;
  h.slices.assign(3, SpinorField(8));
  CHECK(two_step_residual(h, 1, TwoStepScheme::unitary).max_abs() == 0.0);
  CHECK_THROWS_AS(two_step_residual(h, 0, TwoStepScheme::unitary),
                  std::out_of_range);
  CHECK_THROWS_AS(two_step_residual(h, 2, TwoStepScheme::unitary),
                  std::out_of_range);
}

TEST_CASE("leapfrog advance is consistent with the residual") {
  const LatticeSpec spec = make_spec(32, 0.6, 0.5);
  FieldHistory h;
  h.spec = spec;
  h.slices.push_back(random_spinor_field(spec, 9));
  h.slices.push_back(
      walk_step(build_dirac_walk(spec), h.slices[0], spec));
  for (int j = 1; j < 6; ++j)
    h.slices.push_back(two_step_advance(h.slices[j - 1], h.slices[j], spec,
                                        TwoStepScheme::naive));
  for (int j = 1; j < 6; ++j)
    CHECK(two_step_residual(h, j, TwoStepScheme::naive).max_abs() < 1e-12);
}

TEST_CASE("local Hamiltonian of the Dirac walk") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.3);
  const WalkOperator w = build_dirac_walk(spec);
  const LocalHamiltonian lh = local_hamiltonian(w);
  const double mu = mu_eps(0.3);
  CHECK(lh.a0_normalized);
  CHECK((lh.a0 - mu * Mat2{0.0, 1.0, 1.0, 0.0}).max_abs() < 1e-14);
  CHECK((lh.a1 - mu * Mat2{1.0, 0.0, 0.0, -1.0}).max_abs() < 1e-14);
  CHECK(lh.q_times_r.max_abs() < 1e-14);

  const LocalHamiltonian massless =
      local_hamiltonian(build_dirac_walk(make_spec(8, 1.0, 0.0)));
  CHECK_FALSE(massless.a0_normalized);
  CHECK(massless.a0.max_abs() < 1e-14);  // raw (i/2)(M - M^dag) at m = 0
}

TEST_CASE("(i/2)(W - W^dag) acts as the lattice Hamiltonian") {
  const LatticeSpec spec = make_spec(40, 0.7, 0.6);
  const WalkOperator w = build_dirac_walk(spec);
  const double mu = mu_eps(spec.epsilon * spec.mass);
  const Mat2 ta1 = mu * Mat2{1.0, 0.0, 0.0, -1.0};
  const Mat2 ta0 = mu * Mat2{0.0, 1.0, 1.0, 0.0};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SpinorField psi = random_spinor_field(spec, seed, false);
    // (i/2)(W - W^dag) psi
    SpinorField lhs(spec.sites);
    {
      const SpinorField wpsi = walk_step(w, psi, spec);
      // W^dag = W_-1^dag T + W_+1^dag T^-1 + W_0^dag
      const SpinorField tpsi = translate(psi, spec, 1);
      const SpinorField tinv = translate(psi, spec, -1);
      for (int p = 0; p < spec.sites; ++p) {
        const Spinor wdag = w.w_minus.adjoint() * tpsi[p] +
                            w.w_plus.adjoint() * tinv[p] +
                            w.w_zero.adjoint() * psi[p];
        lhs[p] = (0.5 * I) * (wpsi[p] - wdag);
      }
    }
    // eps H psi = eps [tilde_alpha^1 (-i d_1) + m tilde_alpha^0] psi
    const SpinorField d1 = spatial_derivative(psi, spec, DerivFlavor::symmetric);
    double defect = 0.0;
    for (int p = 0; p < spec.sites; ++p) {
      const Spinor rhs = spec.epsilon * ((-I) * (ta1 * d1[p]) +
                                         spec.mass * (ta0 * psi[p]));
      defect = std::max(defect, (lhs[p] - rhs).max_abs());
    }
    CHECK(defect < 1e-12);
  }
}

TEST_CASE("dispersion relation") {
  LatticeSpec massless = make_spec(8, 0.5, 0.0);
  CHECK(dispersion(0.0, massless) == 0.0);
  for (int i = 1; i < 16; ++i) {
    const double k = 0.49 * kPi / massless.epsilon * i / 16.0;
    CHECK(std::abs(dispersion(k, massless) - k) < 1e-12);
    CHECK(std::abs(dispersion(-k, massless) - k) < 1e-12);
  }

  const LatticeSpec massive = make_spec(8, 1.0, 0.1);
  CHECK(std::abs(dispersion(0.0, massive) - std::atan(0.1)) < 1e-14);
  // cos(omega eps) sqrt(1 + (eps m)^2) = cos(k eps) across the zone
  for (int i = -8; i <= 8; ++i) {
    const double k = kPi * i / 8.0;
    const double om = dispersion(k, massive);
    CHECK(std::abs(std::cos(om) * std::sqrt(1.01) - std::cos(k)) < 1e-12);
  }
}

TEST_CASE("amplification factors of the two-step recursion") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.5);
  // unitary scheme: all growth factors on the unit circle
  for (int i = 0; i <= 16; ++i) {
    const double k = -kPi + 2.0 * kPi * i / 16.0;
    CHECK(std::abs(max_amplification(TwoStepScheme::unitary, k, spec) - 1.0) <
          1e-12);
  }
  // naive scheme at k eps = pi/2: s = sqrt(1.25), growth s + sqrt(s^2 - 1)
  const double s = std::sqrt(1.25);
  const double expected = s + std::sqrt(s * s - 1.0);
  CHECK(std::abs(max_amplification(TwoStepScheme::naive, kPi / 2.0, spec) -
                 expected) < 1e-12);
  CHECK(expected == doctest::Approx(1.61803).epsilon(1e-5));

  // k = 0, m = 0: multipliers are +-1
  const LatticeSpec free0 = make_spec(8, 1.0, 0.0);
  const auto lam = amplification_spectrum(TwoStepScheme::naive, 0.0, free0);
  for (const cplx& l : lam) CHECK(std::abs(std::abs(l) - 1.0) < 1e-14);
}

TEST_CASE("naive leapfrog grows while unitary stays flat") {
  const LatticeSpec spec = make_spec(64, 1.0, 0.5);
  const WalkOperator w = build_dirac_walk(spec);
  for (auto scheme : {TwoStepScheme::unitary, TwoStepScheme::naive}) {
    SpinorField prev = random_spinor_field(spec, 21);
    SpinorField cur = walk_step(w, prev, spec);
    for (int j = 0; j < 200; ++j) {
      SpinorField next = two_step_advance(prev, cur, spec, scheme);
      prev = std::move(cur);
      cur = std::move(next);
    }
    const double n = field_norm(cur, spec);
    if (scheme == TwoStepScheme::unitary)
      CHECK(std::abs(n - 1.0) < 1e-10);
    else
      CHECK(n > 10.0);
  }
}
