#pragma once

#include <array>
#include <vector>

#include "lgt/lattice.hpp"

namespace lgt {

// Normalisation prefactor of the unitary scheme. Only 1/sqrt(1+(eps*m)^2)
// is compatible with W W^dag = 1; see unitarity_defect() and the regression
// test around it.
inline double mu_eps(double eps_m) {
  return 1.0 / std::sqrt(1.0 + eps_m * eps_m);
}

// Concrete 2x2 realisation: alpha^1 = diag(1,-1), alpha^0 = sigma_x. With
// this choice P_+/- project onto the upper/lower component, so the walk is
// two shifted copies plus a local mix.
struct InternalAlgebra {
  Mat2 alpha0, alpha1, gamma0, gamma1;
  Mat2 tilde_alpha0, tilde_alpha1, tilde_gamma0, tilde_gamma1;
  Mat2 proj_plus, proj_minus;
  double mu_eps = 1.0;
};

InternalAlgebra make_internal_algebra(double eps_m);

// Jump operators W_-1, W_0, W_+1 of the one-step walk
// W = W_-1 T^-1 + W_+1 T + W_0, plus the derived transport operators.
struct WalkOperator {
  Mat2 w_minus, w_zero, w_plus;
  double eps_m = 0.0;

  Mat2 b_plus() const { return w_plus + w_minus; }
  Mat2 b_minus() const { return w_plus - w_minus; }
  Mat2 m_op() const { return b_plus() + w_zero; }
};

// Max deviation from the six jump-operator unitarity constraints.
double unitarity_defect(const WalkOperator& walk);

// The Dirac walk W = mu_eps [P_- T^-1 + P_+ T - i eps m alpha^0].
WalkOperator build_dirac_walk(const LatticeSpec& spec);

// Same walk but with an arbitrary prefactor in place of mu_eps; exists so the
// wrong-sign prefactor 1/sqrt(1-(eps m)^2) can be shown to break unitarity.
WalkOperator build_walk_with_prefactor(const LatticeSpec& spec,
                                       double prefactor);

// psi_{j+1} = W psi_j.
SpinorField walk_step(const WalkOperator& walk, const SpinorField& psi,
                      const LatticeSpec& spec);

FieldHistory evolve_walk(const WalkOperator& walk, const SpinorField& psi0,
                         const LatticeSpec& spec, int num_steps);

enum class TwoStepScheme { unitary, naive };

// residual_p = (i/2eps)(psi_{j+1,p} - psi_{j-1,p}) - (H psi_j)_p with
// H = tilde_alpha^1 (-i d_1) + m tilde_alpha^0 (unitary) or the untilded
// version (naive).
SpinorField two_step_residual(const FieldHistory& history, int j,
                              TwoStepScheme scheme);

// One explicit two-step leapfrog step psi_{j+1} = psi_{j-1} - 2 i eps H psi_j.
SpinorField two_step_advance(const SpinorField& prev, const SpinorField& cur,
                             const LatticeSpec& spec, TwoStepScheme scheme);

// Internal-space content of eps H_Q = (i/2)(W - W^dag): the matrices A^0,
// A^1 and Q r (Q times the Wilson parameter, left unnormalised since Q = 0
// for the Dirac walk). For eps_m = 0 the mass matrix (i/2)(M - M^dag) is
// reported raw instead of dividing by eps m.
struct LocalHamiltonian {
  Mat2 a0;
  bool a0_normalized = true;
  Mat2 a1;
  Mat2 q_times_r;
};

LocalHamiltonian local_hamiltonian(const WalkOperator& walk);

// Eigenphase omega of the momentum-space walk: cos(omega eps) =
// mu_eps cos(k eps).
double dispersion(double k, const LatticeSpec& spec);

// Momentum-space walk matrix W(k).
Mat2 momentum_space_walk(const WalkOperator& walk, double k,
                         const LatticeSpec& spec);

// Growth factors of the two-step recursion psi_{j+1} = psi_{j-1}
// - 2 i eps H(k) psi_j: lambda = -i s +- sqrt(1 - s^2) for each eigenvalue s
// of eps H(k).
std::array<cplx, 4> amplification_spectrum(TwoStepScheme scheme, double k,
                                           const LatticeSpec& spec);
double max_amplification(TwoStepScheme scheme, double k,
                         const LatticeSpec& spec);

}  // namespace lgt
