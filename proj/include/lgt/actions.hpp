#pragma once

#include <functional>
#include <optional>

#include "lgt/gauge.hpp"
#include "lgt/lattice.hpp"

namespace lgt {

struct ActionValue {
  cplx value{};
  bool is_real_expected = false;
};

// Arguments of the per-site Lagrangian density. The daggered entries are
// independent variables; when evaluated on a history they hold the complex
// conjugates of the field values.
struct DensityArgs {
  int j = 0, p = 0;
  Spinor psi, psi_t, psi_x;     // psi_n, psi_{n+0}, psi_{n+1}
  Spinor psid, psid_t, psid_x;  // psi^dag_n, psi^dag_{n+0}, psi^dag_{n+1}
};

struct LagrangianDensity {
  std::function<cplx(const DensityArgs&)> eval;
  bool needs_gauge = false;
};

// Per-site density of the symmetric action (gauged when a gauge field is
// given); summed over interior sites it reproduces action_symmetric.
LagrangianDensity dqw_density(const LatticeSpec& spec,
                              const GaugeField* gauge = nullptr);

// Density arguments at site (j, p), wrapping the spatial neighbour.
DensityArgs density_args(const FieldHistory& history, int j, int p);

// S = eps^2 sum_n psibarbar_n [(i gamma~^mu d_mu - m) psi]_n over interior
// sites j = 1..J-2, p = 1..P-2.
ActionValue action_asymmetric(const FieldHistory& history);

// S = (i eps/2) sum_n psibarbar_n gamma~^mu U_mu(n) psi_{n+mu} + H.c.
//     - eps^2 m sum_n psibarbar_n psi_n, same interior range.
ActionValue action_symmetric(const FieldHistory& history,
                             const GaugeField* gauge = nullptr);

// The two boundary sums B(0) and B(1) with S_asym = S_sym + B(0) + B(1).
struct BoundaryTerms {
  cplx b0{}, b1{};
  cplx total() const { return b0 + b1; }
};

BoundaryTerms boundary_terms(const FieldHistory& history);

// Both Euler-Lagrange branches at an interior site,
//   psi^dag branch: dL/dpsid_n|_n + sum_mu dL/dpsid_{n+mu}|_{n-mu},
//   psi branch:     dL/dpsi_n|_n + sum_mu dL/dpsi_{n+mu}|_{n-mu},
// with all partials taken by central finite differences (exact up to
// rounding for the multilinear densities used here).
struct ElResidual {
  Spinor psid_branch;  // gradient with respect to psi^dag components
  Spinor psi_branch;   // gradient with respect to psi components
};

ElResidual euler_lagrange_residual(const LagrangianDensity& density,
                                   const FieldHistory& history, int j, int p);

// Holomorphic partial of the density with respect to one argument slot.
enum class DensitySlot { psi, psi_t, psi_x, psid, psid_t, psid_x };
Spinor density_gradient(const LagrangianDensity& density,
                        const DensityArgs& args, DensitySlot slot);

}  // namespace lgt
