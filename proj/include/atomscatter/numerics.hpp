#pragma once

#include <numbers>
#include <span>

#include "atomscatter/types.hpp"

namespace atomscatter {

struct QuadratureSpec {
    unsigned order = 64;      // Gauss-Legendre node count per axis
    double tolerance = 1e-10; // relative error target

    void validate() const {
        if (order < 8)
            throw std::invalid_argument("quad.order: must be >= 8");
        if (!(tolerance > 0.0))
            throw std::invalid_argument("quad.tolerance: must be > 0");
    }
};

/// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(unsigned order);

/// Centered time axis paired with a detuning grid. The time step is fixed
/// by the grid: dt = pi / delta_max, t_j = (j - n/2) dt, so the fast
/// transform's phase ramps reduce to exact sign flips.
struct TransformPlan {
    DetuningGrid grid{};

    double dt() const { return std::numbers::pi / grid.delta_max; }
    double time(std::size_t j) const {
        return (static_cast<double>(j) - static_cast<double>(grid.n) / 2.0) * dt();
    }
};

/// Discrete inverse transform (1/2pi) sum_k S(delta_k) e^{-i delta_k t_j} dDelta,
/// evaluated by an FFT with centering phase ramps when n is a power of two,
/// otherwise by the direct sum. Throws on spectrum/grid size mismatch.
TimeSignal inverse_transform(std::span<const Complex> spectrum, const TransformPlan& plan);

/// (1/2pi) * trapezoid of |S|^2 over the grid. Tail truncation error is
/// O(1/delta_max) for Lorentzian-class spectra.
double spectral_energy(std::span<const Complex> spectrum, const DetuningGrid& grid);

/// sum |a_j|^2 dt over a uniform time signal.
double time_energy(const TimeSignal& signal);

}  // namespace atomscatter
