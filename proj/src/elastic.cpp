#include "atomscatter/elastic.hpp"

#include <cmath>
#include <numbers>

namespace atomscatter {

namespace {

void require_elastic(const DriveParams& drive) {
    if (drive.saturation != 0.0)
        throw std::invalid_argument(
            "channel partition requires the elastic regime (saturation = 0)");
}

// Gamma^2 / (Delta^2 + Gamma^2/4)
double lorentz(double delta, const AtomParams& atom) {
    const double g = atom.gamma;
    return g * g / (delta * delta + 0.25 * g * g);
}

}  // namespace

double scattered_power(double power, const CouplingParams& coupling, double delta,
                       const AtomParams& atom, double saturation) {
    if (!(power >= 0.0))
        throw std::invalid_argument("drive.power: must be >= 0");
    if (!(saturation >= 0.0))
        throw std::invalid_argument("drive.saturation: must be >= 0");
    coupling.validate();
    atom.validate();
    const double x = 2.0 * delta / atom.gamma;
    const double sat = 1.0 + saturation;
    return 4.0 * power * coupling.omega * coupling.eta * coupling.eta /
           ((x * x + 1.0) * sat * sat);
}

double scattered_phase(double delta, const AtomParams& atom, bool gouy) {
    atom.validate();
    const double base = std::atan(2.0 * delta / atom.gamma);
    return base + (gouy ? std::numbers::pi : 0.5 * std::numbers::pi);
}

ChannelFields channel_fields(const DriveParams& drive, const CouplingParams& coupling,
                             double delta, const AtomParams& atom) {
    drive.validate();
    coupling.validate();
    atom.validate();
    require_elastic(drive);

    const double om = coupling.omega;
    const double eta = coupling.eta;
    const double amp = drive.amplitude();
    const double root = std::sqrt(delta * delta + 0.25 * atom.gamma * atom.gamma);
    const double scatter = atom.gamma / root * amp;  // common scattered modulus / (pattern factors)

    const Complex phase_sc = std::polar(1.0, scattered_phase(delta, atom, false) + drive.phi0);
    const Complex phase_gouy = std::polar(1.0, scattered_phase(delta, atom, true) + drive.phi0);
    const Complex incident = std::polar(amp, drive.phi0);

    ChannelFields f;
    f.backward = scatter * eta * std::sqrt(om * (1.0 - om)) * phase_sc;
    f.incoherent = scatter * om * eta * std::sqrt(1.0 - eta * eta) * phase_sc;
    f.coherent = scatter * om * eta * eta * phase_gouy + incident;
    return f;
}

ChannelPowers channel_powers(const DriveParams& drive, const CouplingParams& coupling,
                             double delta, const AtomParams& atom) {
    drive.validate();
    coupling.validate();
    atom.validate();
    require_elastic(drive);

    const double om = coupling.omega;
    const double e2 = coupling.eta * coupling.eta;
    const double p = drive.power;
    const double lor = lorentz(delta, atom);

    ChannelPowers out;
    out.backward = (1.0 - om) * lor * om * e2 * p;
    out.incoherent = lor * om * om * e2 * (1.0 - e2) * p;
    out.coherent = (1.0 + lor * (om * om * e2 * e2 - om * e2)) * p;
    return out;
}

double scattered_power_forward(const DriveParams& drive, const CouplingParams& coupling,
                               double delta, const AtomParams& atom) {
    drive.validate();
    coupling.validate();
    atom.validate();
    const double om = coupling.omega;
    const double e2 = coupling.eta * coupling.eta;
    return lorentz(delta, atom) * om * om * e2 * drive.power;
}

}  // namespace atomscatter
