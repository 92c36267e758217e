#include "atomscatter/reference.hpp"

#include <cmath>

namespace atomscatter::ref {

namespace {
constexpr double kPi = std::numbers::pi;
}

TimeSignal inverse_transform(std::span<const Complex> spectrum, const TransformPlan& plan) {
    plan.grid.validate();
    const std::size_t n = plan.grid.n;
    if (spectrum.size() != n)
        throw std::invalid_argument("inverse_transform: spectrum size does not match grid");

    const double scale = plan.grid.spacing() / (2.0 * kPi);
    TimeSignal signal;
    signal.times.resize(n);
    signal.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = plan.time(j);
        Complex acc{};
        for (std::size_t k = 0; k < n; ++k)
            acc += spectrum[k] * std::polar(1.0, -plan.grid.delta(k) * t);
        signal.times[j] = t;
        signal.values[j] = scale * acc;
    }
    return signal;
}

ChannelSpectra scatter_pulse(const PulseParams& pulse, const CouplingParams& coupling,
                             const DetuningGrid& grid, double phi0) {
    pulse.validate();
    coupling.validate();
    grid.validate();

    const double g = pulse.atom.gamma;
    const double a0 = pulse.a0;
    const double back = coupling.eta * std::sqrt(coupling.omega * (1.0 - coupling.omega));
    const double incoh =
        coupling.omega * coupling.eta * std::sqrt(1.0 - coupling.eta * coupling.eta);
    const double oe2 = coupling.omega * coupling.eta * coupling.eta;
    const Complex global = std::polar(1.0, phi0);

    ChannelSpectra out;
    out.grid = grid;
    out.coherent.resize(grid.n);
    out.incoherent.resize(grid.n);
    out.backward.resize(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double d = grid.delta(k);
        const double denom = d * d + 0.25 * g * g;
        out.backward[k] = Complex{0.0, 1.0} * (a0 * back * g / denom) * global;
        out.incoherent[k] = Complex{0.0, 1.0} * (a0 * incoh * g / denom) * global;
        out.coherent[k] = a0 * Complex{g * (0.5 - oe2), -d} / denom * global;
    }
    return out;
}

double spectral_energy(std::span<const Complex> spectrum, const DetuningGrid& grid) {
    grid.validate();
    if (spectrum.size() != grid.n)
        throw std::invalid_argument("spectral_energy: spectrum size does not match grid");
    double acc = 0.0;
    for (std::size_t k = 0; k < grid.n; ++k)
        acc += std::norm(spectrum[k]);
    acc -= 0.5 * (std::norm(spectrum.front()) + std::norm(spectrum.back()));
    return acc * grid.spacing() / (2.0 * kPi);
}

SolidAngleEstimate weighted_solid_angle(DipolePattern pattern, const AngularAperture& aperture,
                                        const QuadratureSpec& quad) {
    aperture.validate();
    quad.validate();

    const auto integrate = [&](unsigned order) {
        const GaussLegendreRule rule = gauss_legendre(order);
        const double th_c = 0.5 * (aperture.theta_max + aperture.theta_min);
        const double th_h = 0.5 * (aperture.theta_max - aperture.theta_min);
        const double ph_h = 0.5 * (aperture.phi_max - aperture.phi_min);
        double acc = 0.0;
        for (unsigned i = 0; i < order; ++i) {
            const double theta = th_c + th_h * rule.nodes[i];
            double row = 0.0;
            for (unsigned j = 0; j < order; ++j)
                row += rule.weights[j];
            acc += rule.weights[i] * row * dipole_intensity(pattern, theta, 0.0) *
                   std::sin(theta);
        }
        return acc * th_h * ph_h;
    };

    const double norm = 8.0 * kPi / 3.0;
    const double coarse = integrate(quad.order);
    const double fine = integrate(2 * quad.order);
    return {.value = fine / norm, .error_estimate = std::abs(fine - coarse) / norm};
}

}  // namespace atomscatter::ref
