#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgt/noether.hpp"
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

double max_abs_diff(const CurrentField& a, const CurrentField& b) {
  double m = 0.0;
  for (int j = 0; j < a.time_extent(); ++j)
    for (int p = 0; p < a.spec.sites; ++p) {
      m = std::max(m, std::abs(a.j0[j][p] - b.j0[j][p]));
      m = std::max(m, std::abs(a.j1[j][p] - b.j1[j][p]));
    }
  return m;
}

}  // namespace

TEST_CASE("generator of the phase transformation") {
  const InternalTransformation t = u1_phase_transformation();
  const Spinor psi{cplx(0.2, -0.4), cplx(1.0, 0.3)};
  CHECK((t.f(psi, 0.0) - psi).max_abs() == 0.0);
  CHECK((t.generator_at(psi) - I * psi).max_abs() < 1e-14);
  // finite-difference generator agrees with the analytic one
  InternalTransformation fd = t;
  fd.generator = nullptr;
  CHECK((fd.generator_at(psi) - I * psi).max_abs() < 1e-9);
}

TEST_CASE("numeric Noether current matches the closed form") {
  const LatticeSpec spec = make_spec(16, 0.7, 0.5);
  // off shell and on shell alike: the formulas agree identically
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const FieldHistory off = random_history(spec, 5, seed);
    CHECK(max_abs_diff(noether_current_numeric(
                           dqw_density(spec), u1_phase_transformation(), off),
                       closed_form_u1_current(off)) < 1e-8);
  }
  for (std::uint64_t seed = 50; seed < 75; ++seed) {
    const FieldHistory on = walk_history(spec, 5, seed);
    CHECK(max_abs_diff(noether_current_numeric(
                           dqw_density(spec), u1_phase_transformation(), on),
                       closed_form_u1_current(on)) < 1e-8);
  }
}

TEST_CASE("zero field and identity transformation give zero current") {
  const LatticeSpec spec = make_spec(8, 1.0, 0.2);
  FieldHistory zero;
  zero.spec = spec;
  zero.slices.assign(4, SpinorField(8));
  const CurrentField c = noether_current_numeric(
      dqw_density(spec), u1_phase_transformation(), zero);
  for (const auto& row : c.j0)
    for (double v : row) CHECK(v == 0.0);

  InternalTransformation ident;
  ident.f = [](const Spinor& psi, double) { return psi; };
  const CurrentField ci = noether_current_numeric(
      dqw_density(spec), ident, random_history(spec, 4, 1));
  double m = 0.0;
  for (int j = 0; j < ci.time_extent(); ++j)
    for (int p = 0; p < spec.sites; ++p)
      m = std::max({m, std::abs(ci.j0[j][p]), std::abs(ci.j1[j][p])});
  CHECK(m < 1e-10);
}

TEST_CASE("delta history: charge localized, no neighbor overlap") {
  const LatticeSpec spec = make_spec(8, 0.5, 0.0);
  FieldHistory h;
  h.spec = spec;
  h.slices.assign(2, SpinorField(8));
  h.slices[0][3].up = 1.0;
  h.slices[1][3].up = 1.0;  // static toy history
  const CurrentField c = closed_form_u1_current(h);
  CHECK(std::abs(c.j0[0][3] - spec.epsilon) < 1e-15);
  for (int p = 0; p < 8; ++p) {
    if (p != 3) CHECK(c.j0[0][p] == 0.0);
    CHECK(c.j1[0][p] == 0.0);  // delta has no neighbor overlap
  }
}

TEST_CASE("massless right-mover carries J1 = +J0") {
  const LatticeSpec spec = make_spec(32, 0.5, 0.0);
  const double k = 2.0 * 3.14159265358979 / (32 * spec.epsilon) * 3;
  FieldHistory h;
  h.spec = spec;
  h.slices.push_back(plane_wave(spec, k));  // spinor (1, 0): right-mover
  h.slices.push_back(
      walk_step(build_dirac_walk(spec), h.slices[0], spec));
  const CurrentField c = closed_form_u1_current(h);
  for (int p = 0; p < 32; ++p)
    CHECK(std::abs(c.j1[0][p] - c.j0[0][p]) < 1e-13);
}

TEST_CASE("on-shell histories conserve the current exactly") {
  const LatticeSpec spec = make_spec(48, 0.8, 0.45);
  const FieldHistory h = walk_history(spec, 32, 6);
  CHECK(max_divergence(closed_form_u1_current(h)) < 1e-12);
}

TEST_CASE("off-shell histories do not conserve the current") {
  const LatticeSpec spec = make_spec(48, 0.8, 0.45);
  FieldHistory h = walk_history(spec, 8, 6);
  h.slices[4][20].dn += 0.1;
  CHECK(max_divergence(closed_form_u1_current(h)) > 1e-6);
}

TEST_CASE("total charge is constant over 500 steps") {
  const LatticeSpec spec = make_spec(64, 1.0, 0.3);
  const FieldHistory h = walk_history(spec, 501, 8);
  const std::vector<double> q = total_charge(closed_form_u1_current(h));
  for (double v : q) CHECK(std::abs(v - q[0]) < 1e-12);
}

TEST_CASE("gauged current is conserved on gauged-walk histories") {
  LatticeSpec spec = make_spec(40, 0.7, 0.25);
  spec.charge = 0.8;
  const GaugeField gauge = static_a1_field(spec, 24, 9, 0.6, 0.0);
  const WalkOperator w = build_dirac_walk(spec);
  FieldHistory h;
  h.spec = spec;
  h.slices.push_back(random_spinor_field(spec, 10));
  for (int j = 0; j < 23; ++j)
    h.slices.push_back(gauged_walk_step(w, gauge, j, h.slices[j]));
  CHECK(max_divergence(closed_form_u1_current(h, &gauge)) < 1e-12);
}

TEST_CASE("gauged current is invariant under gauge transformations") {
  LatticeSpec spec = make_spec(16, 0.9, 0.5);
  spec.charge = 0.7;
  FieldHistory h = random_history(spec, 5, 12);
  GaugeField g = random_gauge_field(spec, 5, 13, 0.8);
  const CurrentField before = closed_form_u1_current(h, &g);
  apply_gauge_transformation(h, g,
                             random_gauge_transformation(spec, 5, 14, 1.2));
  CHECK(max_abs_diff(closed_form_u1_current(h, &g), before) < 1e-12);
}

TEST_CASE("numeric Noether current matches the closed form when gauged") {
  LatticeSpec spec = make_spec(12, 0.6, 0.4);
  spec.charge = 0.9;
  const FieldHistory h = random_history(spec, 5, 15);
  const GaugeField g = random_gauge_field(spec, 5, 16, 0.7);
  CHECK(max_abs_diff(
            noether_current_numeric(dqw_density(spec, &g),
                                    u1_phase_transformation(), h),
            closed_form_u1_current(h, &g)) < 1e-8);
}
