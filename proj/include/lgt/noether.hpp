#pragma once

#include "lgt/actions.hpp"

namespace lgt {

// One-parameter internal transformation psi -> f(psi, alpha) with
// f(psi, 0) = psi. The generator C_n = df/dalpha|0 is taken by finite
// difference unless supplied analytically.
struct InternalTransformation {
  std::function<Spinor(const Spinor&, double)> f;
  std::function<Spinor(const Spinor&)> generator;  // optional

  Spinor generator_at(const Spinor& psi) const;
};

InternalTransformation u1_phase_transformation();

// (J^0, J^1) per site, defined for j = 0..J-2 (J^0 needs slice j+1).
struct CurrentField {
  LatticeSpec spec;
  std::vector<std::vector<double>> j0;  // [j][p]
  std::vector<std::vector<double>> j1;  // [j][p]

  int time_extent() const { return static_cast<int>(j0.size()); }
};

// Generic lattice Noether current
//   J^mu_n = (dL/dpsi_{n+mu})|_n . C_{n+mu} + C^dag_{n+mu} .
//            (dL/dpsid_{n+mu})|_n,
// with the overall sign fixed to the continuum charge-current convention
// (so that the U(1) phase transformation reproduces the closed form below).
CurrentField noether_current_numeric(const LagrangianDensity& density,
                                     const InternalTransformation& transform,
                                     const FieldHistory& history);

// Closed-form U(1)-charge current
//   J^mu_n = (eps/2)(psibarbar_n gamma~^mu psi_{n+mu} + c.c.), with link
// phases e^{iq eps A_mu} inserted when a gauge field is given.
CurrentField closed_form_u1_current(const FieldHistory& history,
                                    const GaugeField* gauge = nullptr);

// dL_mu J^mu at sites where both backward neighbours exist
// (j = 1..time_extent-1, spatial wrap).
std::vector<std::vector<double>> lattice_divergence(
    const CurrentField& current);

double max_divergence(const CurrentField& current);

// Q_j = sum_p J^0_{j,p}.
std::vector<double> total_charge(const CurrentField& current);

}  // namespace lgt
