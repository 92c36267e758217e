#pragma once

#include "atomscatter/types.hpp"

namespace atomscatter {

/// Spectrum of a0 e^{gamma t/2} H(-t):  a0 / (gamma/2 + i delta).
Complex rising_exp_spectrum(const PulseParams& pulse, double delta);

/// Spectrum of a0 e^{-gamma t/2} H(t):  a0 / (gamma/2 - i delta).
Complex decaying_exp_spectrum(const PulseParams& pulse, double delta);

/// Per-channel output spectra for the rising-exponential pulse, evaluated
/// in closed form on every grid point (parallel over the grid).
ChannelSpectra scatter_pulse(const PulseParams& pulse, const CouplingParams& coupling,
                             const DetuningGrid& grid, double phi0);

/// Split of the coherent output spectrum into rising / decaying exponential
/// parts: rising = (1 - Omega eta^2) a0, decaying = -Omega eta^2 a0, both
/// multiplied by e^{i phi0}.
ExpDecomposition decompose_coherent(const PulseParams& pulse, const CouplingParams& coupling,
                                    double phi0 = 0.0);

/// Power fraction of the response in the temporally decaying components:
/// Omega eta^2.
double absorbed_fraction(const CouplingParams& coupling);

/// Closed-form temporal envelopes of the three channels. At t = 0 the
/// decaying branch owns the value (right-continuous step).
Complex analytic_time_domain(Channel channel, const PulseParams& pulse,
                             const CouplingParams& coupling, double t, double phi0 = 0.0);

/// Independent verification route for absorbed_fraction: energy of the
/// temporally decaying parts of all channels (coherent decaying term plus
/// half of each double-sided channel), integrated on the grid by Parseval,
/// divided by the total output energy.
double absorbed_fraction_parseval(const PulseParams& pulse, const CouplingParams& coupling,
                                  const DetuningGrid& grid);

}  // namespace atomscatter
