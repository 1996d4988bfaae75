#pragma once

#include "lgt/actions.hpp"
#include "lgt/noether.hpp"

namespace lgt {

// Pure-gauge U(1) potential on a fully periodic (d+1)-dimensional grid,
// d = 1 or 3. extent[0] is time.
struct GaugeLattice {
  std::vector<int> extent;
  double epsilon = 1.0;
  double q = 1.0;
  std::vector<std::vector<double>> a;  // [direction][flattened site]

  static GaugeLattice zero(std::vector<int> extent, double epsilon, double q);

  int dirs() const { return static_cast<int>(extent.size()); }
  int volume() const;
  int flat(const std::vector<int>& coords) const;
  int neighbor(int flat_index, int mu, int shift) const;

  void validate() const;
};

// F_{mu nu}(n) = dR_mu A_nu - dR_nu A_mu on the periodic grid.
double field_strength_nd(const GaugeLattice& lattice, int n, int mu, int nu);

// S_G = S_G^time + S_G^space built from plaquette cosines; prefactor 1/q^2
// in 3+1D and 1/(q^2 eps^2) in 1+1D.
double gauge_action(const GaugeLattice& lattice);

// Leading continuum value -(1/4) sum_n eps^4 F_{mu nu} F^{mu nu} times the
// same dimension-dependent prefactor normalisation as gauge_action.
double gauge_action_continuum_reference(const GaugeLattice& lattice);

// 1+1D gauge action on a coupled-system gauge field: temporal plaquettes
// j = 0..J-2, spatial wrap, prefactor 1/(q^2 eps^2).
double gauge_action_1p1(const GaugeField& gauge);

// Numeric partial of the total action S = S_DQW^g + S_G with respect to
// (A_mu)_n, central differences.
double gauge_el_residual_numeric(const FieldHistory& history,
                                 const GaugeField& gauge, int j, int p,
                                 int mu);

// Closed form of the same derivative,
//   -q eps J_g^mu(n) + sum_nu dL_nu [ (1/q) sin(q eps^2 F^{nu mu}) ](n).
double maxwell_el_residual_closed(const FieldHistory& history,
                                  const GaugeField& gauge, int j, int p,
                                  int mu);

// Electric field on the temporal links j -> j+1, one value per spatial site.
using ElectricField1p1 = std::vector<double>;

struct SaturationError : std::runtime_error {
  int step, site;
  SaturationError(const std::string& what, int step_, int site_)
      : std::runtime_error(what), step(step_), site(site_) {}
};

struct GaussConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-site Gauss residual dL_1[(1/q) sin(q eps^2 E)] - q eps J0; for q = 0
// the q -> 0 limit eps^2 dL_1 E is used.
std::vector<double> gauss_residual(const ElectricField1p1& e,
                                   const std::vector<double>& j0,
                                   const LatticeSpec& spec);

// Integrates the Gauss constraint: s_p = s_{p-1} + q^2 eps^2 J0_p with
// s = sin(q eps^2 E) and E_p = arcsin(s_p)/(q eps^2), principal branch.
// background_e0 sets the field entering site 0. Periodic consistency
// requires vanishing net charge.
ElectricField1p1 gauss_solve(const std::vector<double>& j0,
                             const LatticeSpec& spec, double background_e0);

// sin(q eps^2 E_j) = sin(q eps^2 E_{j-1}) - q^2 eps^2 J1_j, principal
// branch; throws SaturationError (state untouched) if no real solution.
ElectricField1p1 ampere_update(const ElectricField1p1& e_prev,
                               const std::vector<double>& j1,
                               const LatticeSpec& spec, int step = -1);

struct CoupledStepRecord {
  int step = 0;
  double norm = 0.0;
  double total_charge = 0.0;
  double max_gauss_residual = 0.0;
};

struct CoupledOptions {
  int steps = 0;
  bool solve_initial_gauss = true;   // else use initial_e
  ElectricField1p1 initial_e;
  double background_e0 = 0.0;
  bool record_profiles = false;
  // Subtract the mean initial charge density as a static uniform background
  // (the periodic Gauss constraint is only solvable for zero net charge).
  bool neutralize_background = true;
};

struct CoupledResult {
  FieldHistory history;
  GaugeField gauge;  // A_0 = 0 (temporal gauge), A_1 as evolved
  std::vector<CoupledStepRecord> records;
  std::vector<ElectricField1p1> e_history;  // per step when recording, else
                                            // just the final field
  double background_density = 0.0;  // uniform neutralizing charge density
};

// Temporal-gauge leapfrog of matter and gauge field: per step, Ampere update
// of E sourced by the walk flux of the previous step, A_1 += eps E, then the
// gauged walk through the slice-j links.  Sourcing Gauss with the walk charge
// density eps |psi|^2 and Ampere with the matching link flux keeps the Gauss
// residual at round-off for any number of steps, because that pair satisfies
// the discrete continuity equation identically.  Requires periodic boundary.
CoupledResult coupled_evolve(const LatticeSpec& spec, const SpinorField& psi0,
                             const CoupledOptions& options);

}  // namespace lgt
