#include "atomscatter/pulse.hpp"

#include <cmath>

#include "atomscatter/numerics.hpp"

namespace atomscatter {

namespace {

struct ChannelCoeffs {
    double back;   // eta sqrt(Omega (1 - Omega))
    double incoh;  // Omega eta sqrt(1 - eta^2)
    double oe2;    // Omega eta^2
};

ChannelCoeffs coeffs(const CouplingParams& c) {
    return {c.eta * std::sqrt(c.omega * (1.0 - c.omega)),
            c.omega * c.eta * std::sqrt(1.0 - c.eta * c.eta), c.omega * c.eta * c.eta};
}

}  // namespace

Complex rising_exp_spectrum(const PulseParams& pulse, double delta) {
    pulse.validate();
    return pulse.a0 / Complex{0.5 * pulse.atom.gamma, delta};
}

Complex decaying_exp_spectrum(const PulseParams& pulse, double delta) {
    pulse.validate();
    return pulse.a0 / Complex{0.5 * pulse.atom.gamma, -delta};
}

ChannelSpectra scatter_pulse(const PulseParams& pulse, const CouplingParams& coupling,
                             const DetuningGrid& grid, double phi0) {
    pulse.validate();
    coupling.validate();
    grid.validate();

    const double g = pulse.atom.gamma;
    const double a0 = pulse.a0;
    const ChannelCoeffs c = coeffs(coupling);
    const Complex global = std::polar(1.0, phi0);

    ChannelSpectra out;
    out.grid = grid;
    out.coherent.resize(grid.n);
    out.incoherent.resize(grid.n);
    out.backward.resize(grid.n);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grid.n); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double d = grid.delta(k);
        const double denom = d * d + 0.25 * g * g;
        out.backward[k] = Complex{0.0, 1.0} * (a0 * c.back * g / denom) * global;
        out.incoherent[k] = Complex{0.0, 1.0} * (a0 * c.incoh * g / denom) * global;
        out.coherent[k] = a0 * Complex{g * (0.5 - c.oe2), -d} / denom * global;
    }
    return out;
}

ExpDecomposition decompose_coherent(const PulseParams& pulse, const CouplingParams& coupling,
                                    double phi0) {
    pulse.validate();
    coupling.validate();
    const double oe2 = coupling.omega * coupling.eta * coupling.eta;
    const Complex global = std::polar(1.0, phi0);
    return {.rising_coeff = (1.0 - oe2) * pulse.a0 * global,
            .decaying_coeff = -oe2 * pulse.a0 * global};
}

double absorbed_fraction(const CouplingParams& coupling) {
    coupling.validate();
    return coupling.omega * coupling.eta * coupling.eta;
}

Complex analytic_time_domain(Channel channel, const PulseParams& pulse,
                             const CouplingParams& coupling, double t, double phi0) {
    pulse.validate();
    coupling.validate();

    const double g = pulse.atom.gamma;
    const double a0 = pulse.a0;
    const ChannelCoeffs c = coeffs(coupling);
    const Complex global = std::polar(1.0, phi0);

    switch (channel) {
        case Channel::Coherent:
            // decaying branch owns t = 0
            if (t < 0.0)
                return a0 * (1.0 - c.oe2) * std::exp(0.5 * g * t) * global;
            return -a0 * c.oe2 * std::exp(-0.5 * g * t) * global;
        case Channel::Backward:
            return Complex{0.0, 1.0} * (a0 * c.back * std::exp(-0.5 * g * std::abs(t))) * global;
        case Channel::Incoherent:
            return Complex{0.0, 1.0} * (a0 * c.incoh * std::exp(-0.5 * g * std::abs(t))) * global;
    }
    throw std::invalid_argument("analytic_time_domain: unknown channel");
}

double absorbed_fraction_parseval(const PulseParams& pulse, const CouplingParams& coupling,
                                  const DetuningGrid& grid) {
    const ChannelSpectra spectra = scatter_pulse(pulse, coupling, grid, 0.0);
    const ExpDecomposition dec = decompose_coherent(pulse, coupling);

    std::vector<Complex> coh_decaying(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k)
        coh_decaying[k] = dec.decaying_coeff / Complex{0.5 * pulse.atom.gamma, -grid.delta(k)};

    const double e_back = spectral_energy(spectra.backward, grid);
    const double e_incoh = spectral_energy(spectra.incoherent, grid);
    const double e_coh = spectral_energy(spectra.coherent, grid);
    const double decaying =
        spectral_energy(coh_decaying, grid) + 0.5 * (e_back + e_incoh);
    const double total = e_coh + e_back + e_incoh;
    return total > 0.0 ? decaying / total : 0.0;
}

}  // namespace atomscatter
