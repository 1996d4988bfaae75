#include "lgt/dirac_walk.hpp"

namespace lgt {

namespace {

const Mat2 kAlpha0{0.0, 1.0, 1.0, 0.0};   // sigma_x
const Mat2 kAlpha1{1.0, 0.0, 0.0, -1.0};  // sigma_z

}  // namespace

InternalAlgebra make_internal_algebra(double eps_m) {
  InternalAlgebra a;
  const double mu = mu_eps(eps_m);
  a.mu_eps = mu;
  a.alpha0 = kAlpha0;
  a.alpha1 = kAlpha1;
  a.gamma0 = kAlpha0;            // gamma^0 = alpha^0
  a.gamma1 = kAlpha0 * kAlpha1;  // gamma^1 = alpha^0 alpha^1
  a.tilde_alpha0 = mu * kAlpha0;
  a.tilde_alpha1 = mu * kAlpha1;
  a.tilde_gamma0 = (1.0 / mu) * a.gamma0;
  a.tilde_gamma1 = a.gamma1;
  a.proj_plus = 0.5 * (Mat2::identity() + kAlpha1);
  a.proj_minus = 0.5 * (Mat2::identity() - kAlpha1);
  return a;
}

double unitarity_defect(const WalkOperator& walk) {
  const Mat2 one = Mat2::identity();
  const Mat2& wm = walk.w_minus;
  const Mat2& w0 = walk.w_zero;
  const Mat2& wp = walk.w_plus;
  double d = 0.0;
  // W W^dag = 1 split by shift distance ...
  d = std::max(d, (wp * wp.adjoint() + w0 * w0.adjoint() +
                   wm * wm.adjoint() - one)
                      .max_abs());
  d = std::max(d, (wp * w0.adjoint() + w0 * wm.adjoint()).max_abs());
  d = std::max(d, (wp * wm.adjoint()).max_abs());
  // ... and W^dag W = 1 likewise.
  d = std::max(d, (wp.adjoint() * wp + w0.adjoint() * w0 +
                   wm.adjoint() * wm - one)
                      .max_abs());
  d = std::max(d, (w0.adjoint() * wp + wm.adjoint() * w0).max_abs());
  d = std::max(d, (wm.adjoint() * wp).max_abs());
  return d;
}

WalkOperator build_walk_with_prefactor(const LatticeSpec& spec,
                                       double prefactor) {
  const double eps_m = spec.epsilon * spec.mass;
  const InternalAlgebra a = make_internal_algebra(eps_m);
  WalkOperator w;
  w.eps_m = eps_m;
  w.w_plus = prefactor * a.proj_plus;
  w.w_minus = prefactor * a.proj_minus;
  w.w_zero = (-I * eps_m * prefactor) * a.alpha0;
  return w;
}

WalkOperator build_dirac_walk(const LatticeSpec& spec) {
  return build_walk_with_prefactor(spec,
                                   mu_eps(spec.epsilon * spec.mass));
}

SpinorField walk_step(const WalkOperator& walk, const SpinorField& psi,
                      const LatticeSpec& spec) {
  const int P = psi.sites();
  const SpinorField left = translate(psi, spec, -1);   // psi_{p+1}
  const SpinorField right = translate(psi, spec, +1);  // psi_{p-1}
  SpinorField out(P);
  for (int p = 0; p < P; ++p)
    out[p] = walk.w_minus * left[p] + walk.w_plus * right[p] +
             walk.w_zero * psi[p];
  return out;
}

FieldHistory evolve_walk(const WalkOperator& walk, const SpinorField& psi0,
                         const LatticeSpec& spec, int num_steps) {
  FieldHistory h;
  h.spec = spec;
  h.slices.reserve(num_steps + 1);
  h.slices.push_back(psi0);
  for (int j = 0; j < num_steps; ++j)
    h.slices.push_back(walk_step(walk, h.slices.back(), spec));
  return h;
}

namespace {

// H psi with H = A^1 (-i d_1) + m A^0 where (A^0, A^1) are the tilded or
// plain alpha matrices.
SpinorField apply_lattice_hamiltonian(const SpinorField& psi,
                                      const LatticeSpec& spec,
                                      TwoStepScheme scheme) {
  const double eps_m = spec.epsilon * spec.mass;
  const InternalAlgebra a = make_internal_algebra(eps_m);
  const Mat2 a0 = scheme == TwoStepScheme::unitary ? a.tilde_alpha0 : a.alpha0;
  const Mat2 a1 = scheme == TwoStepScheme::unitary ? a.tilde_alpha1 : a.alpha1;
  const SpinorField d1 =
      spatial_derivative(psi, spec, DerivFlavor::symmetric);
  SpinorField out(psi.sites());
  for (int p = 0; p < psi.sites(); ++p)
    out[p] = (-I) * (a1 * d1[p]) + spec.mass * (a0 * psi[p]);
  return out;
}

}  // namespace

SpinorField two_step_residual(const FieldHistory& history, int j,
                              TwoStepScheme scheme) {
  const LatticeSpec& spec = history.spec;
  const SpinorField d0 =
      temporal_derivative(history, j, DerivFlavor::symmetric);
  const SpinorField hpsi =
      apply_lattice_hamiltonian(history.at(j), spec, scheme);
  SpinorField out(d0.sites());
  for (int p = 0; p < out.sites(); ++p) out[p] = I * d0[p] - hpsi[p];
  return out;
}

SpinorField two_step_advance(const SpinorField& prev, const SpinorField& cur,
                             const LatticeSpec& spec, TwoStepScheme scheme) {
  const SpinorField hpsi = apply_lattice_hamiltonian(cur, spec, scheme);
  SpinorField out(cur.sites());
  const cplx c = -2.0 * I * spec.epsilon;
  for (int p = 0; p < out.sites(); ++p) out[p] = prev[p] + c * hpsi[p];
  return out;
}

LocalHamiltonian local_hamiltonian(const WalkOperator& walk) {
  LocalHamiltonian h;
  const Mat2 m = walk.m_op();
  const Mat2 m_diff = (0.5 * I) * (m - m.adjoint());
  if (walk.eps_m > 0.0) {
    h.a0 = (1.0 / walk.eps_m) * m_diff;
    h.a0_normalized = true;
  } else {
    h.a0 = m_diff;
    h.a0_normalized = false;
  }
  const Mat2 bm = walk.b_minus();
  h.a1 = 0.5 * (bm + bm.adjoint());
  const Mat2 bp = walk.b_plus();
  h.q_times_r = (-0.5 * I) * (bp - bp.adjoint());
  return h;
}

double dispersion(double k, const LatticeSpec& spec) {
  const double mu = mu_eps(spec.epsilon * spec.mass);
  return std::acos(mu * std::cos(k * spec.epsilon)) / spec.epsilon;
}

Mat2 momentum_space_walk(const WalkOperator& walk, double k,
                         const LatticeSpec& spec) {
  // T -> e^{-i k eps}, T^-1 -> e^{i k eps} on plane waves e^{i k p eps}.
  const cplx phase = std::exp(I * k * spec.epsilon);
  return phase * walk.w_minus + std::conj(phase) * walk.w_plus + walk.w_zero;
}

std::array<cplx, 4> amplification_spectrum(TwoStepScheme scheme, double k,
                                           const LatticeSpec& spec) {
  const double eps_m = spec.epsilon * spec.mass;
  const double sin_k = std::sin(k * spec.epsilon);
  // eps H(k) has eigenvalues +-s0.
  double s0 = std::sqrt(sin_k * sin_k + eps_m * eps_m);
  if (scheme == TwoStepScheme::unitary) s0 *= mu_eps(eps_m);
  std::array<cplx, 4> out;
  int idx = 0;
  for (double s : {s0, -s0}) {
    const cplx root = std::sqrt(cplx(1.0 - s * s, 0.0));
    out[idx++] = -I * s + root;
    out[idx++] = -I * s - root;
  }
  return out;
}

double max_amplification(TwoStepScheme scheme, double k,
                         const LatticeSpec& spec) {
  double m = 0.0;
  for (const cplx& lam : amplification_spectrum(scheme, k, spec))
    m = std::max(m, std::abs(lam));
  return m;
}

}  // namespace lgt
