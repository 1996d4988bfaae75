#include "lgt/random_fields.hpp"

#include <cmath>
#include <random>

namespace lgt {

namespace {

constexpr double kPi = 3.14159265358979323846;

SpinorField draw_slice(const LatticeSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SpinorField out(spec.sites);
  for (int p = 0; p < spec.sites; ++p) {
    out[p].up = cplx(dist(rng), dist(rng));
    out[p].dn = cplx(dist(rng), dist(rng));
  }
  return out;
}

void normalize(SpinorField& field, const LatticeSpec& spec) {
  const double n = field_norm(field, spec);
  if (n == 0.0) return;
  for (auto& s : field.values) s = (1.0 / n) * s;
}

}  // namespace

SpinorField random_spinor_field(const LatticeSpec& spec, std::uint64_t seed,
                                bool normalized) {
  std::mt19937_64 rng(seed);
  SpinorField out = draw_slice(spec, rng);
  if (normalized) normalize(out, spec);
  return out;
}

FieldHistory random_history(const LatticeSpec& spec, int slices,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FieldHistory h;
  h.spec = spec;
  for (int j = 0; j < slices; ++j) h.slices.push_back(draw_slice(spec, rng));
  return h;
}

FieldHistory walk_history(const LatticeSpec& spec, int slices,
                          std::uint64_t seed) {
  const WalkOperator walk = build_dirac_walk(spec);
  return evolve_walk(walk, random_spinor_field(spec, seed), spec, slices - 1);
}

GaugeField random_gauge_field(const LatticeSpec& spec, int slices,
                              std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  LatticeSpec gspec = spec;
  gspec.steps = slices;
  GaugeField g = GaugeField::zero(gspec);
  for (int j = 0; j < slices; ++j)
    for (int p = 0; p < spec.sites; ++p) {
      g.a0[j][p] = dist(rng);
      g.a1[j][p] = dist(rng);
    }
  return g;
}

GaugeField smooth_gauge_field(const LatticeSpec& spec, int slices,
                              std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  LatticeSpec gspec = spec;
  gspec.steps = slices;
  GaugeField g = GaugeField::zero(gspec);
  const int modes = 3;
  for (int mu = 0; mu < 2; ++mu)
    for (int n = 1; n <= modes; ++n) {
      const double cx = coef(rng) * amplitude / modes;
      const double ct = coef(rng) * amplitude / modes;
      const double px = phase(rng);
      const double pt = phase(rng);
      for (int j = 0; j < slices; ++j)
        for (int p = 0; p < spec.sites; ++p)
          g.a(mu, j, p) +=
              cx * std::cos(2.0 * kPi * n * p / spec.sites + px) +
              ct * std::cos(2.0 * kPi * n * j / slices + pt);
    }
  return g;
}

GaugeField static_a1_field(const LatticeSpec& spec, int slices,
                           std::uint64_t seed, double amplitude,
                           double uniform_a0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  LatticeSpec gspec = spec;
  gspec.steps = slices;
  GaugeField g = GaugeField::zero(gspec);
  std::vector<double> profile(spec.sites);
  for (double& v : profile) v = dist(rng);
  for (int j = 0; j < slices; ++j)
    for (int p = 0; p < spec.sites; ++p) {
      g.a0[j][p] = uniform_a0;
      g.a1[j][p] = profile[p];
    }
  return g;
}

GaugeTransformation random_gauge_transformation(const LatticeSpec& spec,
                                                int slices, std::uint64_t seed,
                                                double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  GaugeTransformation t;
  t.phi.assign(slices, std::vector<double>(spec.sites, 0.0));
  for (auto& row : t.phi)
    for (double& v : row) v = dist(rng);
  return t;
}

GaugeLattice smooth_gauge_lattice(std::vector<int> extent, double epsilon,
                                  double q, std::uint64_t seed,
                                  double amplitude) {
  GaugeLattice lat = GaugeLattice::zero(std::move(extent), epsilon, q);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  const int D = lat.dirs();
  for (int mu = 0; mu < D; ++mu)
    for (int d = 0; d < D; ++d) {
      // one low mode per direction keeps derivatives O(amplitude) at any eps
      const double c = coef(rng) * amplitude / D;
      const double ph = phase(rng);
      std::vector<int> coords(D, 0);
      for (int n = 0; n < lat.volume(); ++n) {
        int rem = n;
        for (int k = D - 1; k >= 0; --k) {
          coords[k] = rem % lat.extent[k];
          rem /= lat.extent[k];
        }
        lat.a[mu][n] +=
            c * std::cos(2.0 * kPi * coords[d] / lat.extent[d] + ph);
      }
    }
  return lat;
}

SpinorField gaussian_packet(const LatticeSpec& spec, double center,
                            double width, double k0) {
  SpinorField out(spec.sites);
  for (int p = 0; p < spec.sites; ++p) {
    const double d = p - center;
    const double env = std::exp(-d * d / (4.0 * width * width));
    out[p].up = env * std::exp(I * k0 * static_cast<double>(p) * spec.epsilon);
    out[p].dn = 0.0;
  }
  normalize(out, spec);
  return out;
}

SpinorField plane_wave(const LatticeSpec& spec, double k) {
  const double eps = spec.epsilon;
  const double em = eps * spec.mass;
  const double mu = mu_eps(em);
  // positive-eigenvalue spinor of eps H(k) = mu [sin(k eps) alpha^1
  // + eps m alpha^0]
  const double sk = std::sin(k * eps);
  const double s0 = std::sqrt(sk * sk + em * em);
  double u = 1.0, d = 0.0;
  if (s0 > 0.0) {
    u = em;
    d = s0 - sk;
    const double n = std::sqrt(u * u + d * d);
    if (n > 0.0) {
      u /= n;
      d /= n;
    } else {  // massless mode aligned with alpha^1: (1, 0)
      u = 1.0;
      d = 0.0;
    }
  }
  SpinorField out(spec.sites);
  for (int p = 0; p < spec.sites; ++p) {
    const cplx ph = std::exp(I * k * static_cast<double>(p) * eps);
    out[p].up = u * ph;
    out[p].dn = d * ph;
  }
  normalize(out, spec);
  return out;
}

}  // namespace lgt
