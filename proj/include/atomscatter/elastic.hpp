#pragma once

#include "atomscatter/types.hpp"

namespace atomscatter {

/// Total scattered power 4 P Omega eta^2 / ((4 Delta^2/Gamma^2 + 1)(1 + s)^2).
double scattered_power(double power, const CouplingParams& coupling, double delta,
                       const AtomParams& atom, double saturation);

/// Phase of the scattered wave relative to the incident field:
/// arctan(2 Delta / Gamma) + pi/2, plus another pi/2 when the Gouy shift of
/// the forward interference channel is included.
double scattered_phase(double delta, const AtomParams& atom, bool gouy);

/// Elastic (s = 0) three-channel field partition. The global incident phase
/// phi0 multiplies every channel. Throws if drive.saturation != 0.
ChannelFields channel_fields(const DriveParams& drive, const CouplingParams& coupling,
                             double delta, const AtomParams& atom);

/// Closed-form channel powers; each equals |channel field|^2 and the three
/// sum to the incident power.
ChannelPowers channel_powers(const DriveParams& drive, const CouplingParams& coupling,
                             double delta, const AtomParams& atom);

/// Scattered power emitted into the forward aperture,
/// Gamma^2 Omega^2 eta^2 / (Delta^2 + Gamma^2/4) * A^2.
double scattered_power_forward(const DriveParams& drive, const CouplingParams& coupling,
                               double delta, const AtomParams& atom);

}  // namespace atomscatter
