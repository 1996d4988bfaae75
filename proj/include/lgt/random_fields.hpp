#pragma once

#include <cstdint>

#include "lgt/gauge.hpp"
#include "lgt/maxwell.hpp"

namespace lgt {

// Deterministic pseudo-random field generators used by the verification
// suites; the same seed always reproduces the same configuration.

SpinorField random_spinor_field(const LatticeSpec& spec, std::uint64_t seed,
                                bool normalized = true);

// Generic off-shell history: independently random slices.
FieldHistory random_history(const LatticeSpec& spec, int slices,
                            std::uint64_t seed);

// On-shell history generated by the Dirac walk from a random initial slice.
FieldHistory walk_history(const LatticeSpec& spec, int slices,
                          std::uint64_t seed);

// Uniformly random potentials in [-amplitude, amplitude] on every link of
// a (slices x sites) grid.
GaugeField random_gauge_field(const LatticeSpec& spec, int slices,
                              std::uint64_t seed, double amplitude);

// Band-limited smooth potentials: a few low spatial/temporal Fourier modes
// with random coefficients, so right-derivatives are O(amplitude).
GaugeField smooth_gauge_field(const LatticeSpec& spec, int slices,
                              std::uint64_t seed, double amplitude);

// A_1 spatially varying but constant in time; A_0 spatially uniform
// (per-slice value uniform_a0, default 0).
GaugeField static_a1_field(const LatticeSpec& spec, int slices,
                           std::uint64_t seed, double amplitude,
                           double uniform_a0 = 0.0);

GaugeTransformation random_gauge_transformation(const LatticeSpec& spec,
                                                int slices, std::uint64_t seed,
                                                double amplitude);

// Smooth periodic potentials on a fully periodic pure-gauge grid.
GaugeLattice smooth_gauge_lattice(std::vector<int> extent, double epsilon,
                                  double q, std::uint64_t seed,
                                  double amplitude);

// Normalised Gaussian wave packet exp(-(p-center)^2/(4 width^2) + i k0 p eps)
// in the upper component.
SpinorField gaussian_packet(const LatticeSpec& spec, double center,
                            double width, double k0);

// Normalised plane wave e^{i k p eps} in the positive-energy eigenspinor of
// the momentum-space walk.
SpinorField plane_wave(const LatticeSpec& spec, double k);

}  // namespace lgt
