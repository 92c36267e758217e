#pragma once

// Serial reference implementations of the parallel kernels. These follow the
// defining sums directly (no FFT, no threading) and are kept for tests and
// the kernel benchmark.

#include <span>

#include "atomscatter/geometry.hpp"
#include "atomscatter/numerics.hpp"
#include "atomscatter/types.hpp"

namespace atomscatter::ref {

/// Direct O(n^2) evaluation of (1/2pi) sum_k S(delta_k) e^{-i delta_k t_j} dDelta.
TimeSignal inverse_transform(std::span<const Complex> spectrum, const TransformPlan& plan);

/// Serial loop over the grid, same closed forms as pulse::scatter_pulse.
ChannelSpectra scatter_pulse(const PulseParams& pulse, const CouplingParams& coupling,
                             const DetuningGrid& grid, double phi0);

/// Serial trapezoid of |S|^2 / 2pi.
double spectral_energy(std::span<const Complex> spectrum, const DetuningGrid& grid);

/// Serial product Gauss-Legendre quadrature of the dipole pattern.
SolidAngleEstimate weighted_solid_angle(DipolePattern pattern, const AngularAperture& aperture,
                                        const QuadratureSpec& quad = {});

}  // namespace atomscatter::ref
