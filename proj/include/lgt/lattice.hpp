#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgt/algebra.hpp"

namespace lgt {

enum class Boundary { periodic, fixed_zero };

// Lattice geometry plus the physical constants carried by every field built
// on it. epsilon is the common spacing of time and space.
struct LatticeSpec {
  int sites = 2;         // spatial extent P
  int steps = 3;         // temporal extent J
  double epsilon = 1.0;  // spacetime-lattice spacing
  Boundary boundary = Boundary::periodic;
  double mass = 0.0;    // m >= 0
  double charge = 0.0;  // q

  void validate() const {
    if (sites < 2) throw std::invalid_argument("lattice.sites must be >= 2");
    if (steps < 1) throw std::invalid_argument("lattice.steps must be >= 1");
    if (!(epsilon > 0.0))
      throw std::invalid_argument("lattice.epsilon must be > 0");
    if (mass < 0.0) throw std::invalid_argument("matter.mass must be >= 0");
  }
};

// One time slice of the two-component field.
struct SpinorField {
  std::vector<Spinor> values;

  SpinorField() = default;
  explicit SpinorField(int sites) : values(sites) {}

  int sites() const { return static_cast<int>(values.size()); }
  Spinor& operator[](int p) { return values[p]; }
  const Spinor& operator[](int p) const { return values[p]; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& s : values) m = std::max(m, s.max_abs());
    return m;
  }
};

// Ordered time slices psi_j, j = 0..steps-1. Time is never wrapped: access
// outside the stored range is an error.
struct FieldHistory {
  LatticeSpec spec;
  std::vector<SpinorField> slices;

  const SpinorField& at(int j) const {
    if (j < 0 || j >= static_cast<int>(slices.size()))
      throw std::out_of_range("time slice " + std::to_string(j) +
                              " not stored");
    return slices[j];
  }
  int num_slices() const { return static_cast<int>(slices.size()); }
};

enum class DerivFlavor { symmetric, left, right };

// (T_1 psi)_p = psi_{p-1}; steps = -1 gives the inverse shift. Wraps under
// periodic boundary, zero-fills under fixed-zero.
SpinorField translate(const SpinorField& field, const LatticeSpec& spec,
                      int steps);

// d = (T^-1 - T)/(2 eps), dL = (1 - T)/eps, dR = (T^-1 - 1)/eps.
SpinorField spatial_derivative(const SpinorField& field,
                               const LatticeSpec& spec, DerivFlavor flavor);
SpinorField temporal_derivative(const FieldHistory& history, int j,
                                DerivFlavor flavor);

// L = T^-1 + T - 2.
SpinorField laplacian(const SpinorField& field, const LatticeSpec& spec);

// ||psi||^2 = eps * sum_p |psi_p|^2, <psi|phi> = eps * sum_p psi^dag phi.
double field_norm(const SpinorField& field, const LatticeSpec& spec);
cplx inner(const SpinorField& a, const SpinorField& b, const LatticeSpec& spec);

}  // namespace lgt
