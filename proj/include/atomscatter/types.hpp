#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace atomscatter {

using Complex = std::complex<double>;

/// Atomic transition parameters. In normalized units gamma = 1 and
/// detunings / times are expressed in units of gamma / 1/gamma.
struct AtomParams {
    double gamma = 1.0;  // spontaneous emission rate (rad/s)

    void validate() const {
        if (!(gamma > 0.0))
            throw std::invalid_argument("atom.gamma: must be > 0");
    }
};

/// Coupling of the focused beam to the atomic dipole wave.
struct CouplingParams {
    double omega = 1.0;  // dipole-weighted solid-angle fraction, [0, 1]
    double eta = 1.0;    // spatial mode overlap within the covered solid angle, [0, 1]

    void validate() const {
        if (!(omega >= 0.0 && omega <= 1.0))
            throw std::invalid_argument("coupling.omega: must be in [0, 1]");
        if (!(eta >= 0.0 && eta <= 1.0))
            throw std::invalid_argument("coupling.eta: must be in [0, 1]");
    }
};

/// Monochromatic drive. Field amplitude convention: A = sqrt(P).
struct DriveParams {
    double power = 1.0;       // incident power, arbitrary units
    double phi0 = 0.0;        // global incident phase (rad)
    double saturation = 0.0;  // saturation parameter s, caller supplied

    double amplitude() const { return std::sqrt(power); }

    void validate() const {
        if (!(power >= 0.0))
            throw std::invalid_argument("drive.power: must be >= 0");
        if (!(saturation >= 0.0))
            throw std::invalid_argument("drive.saturation: must be >= 0");
    }
};

/// Rising-exponential pulse, time constant locked to the atomic lifetime:
/// envelope a0 * exp(gamma t / 2) * H(-t).
struct PulseParams {
    double a0 = 1.0;  // peak amplitude (sqrt-power units)
    AtomParams atom{};

    void validate() const {
        if (!(a0 >= 0.0))
            throw std::invalid_argument("pulse.a0: must be >= 0");
        atom.validate();
    }
};

/// Uniform symmetric sampling of the detuning axis:
/// delta_k = -delta_max + k * (2 delta_max / n), k = 0..n-1.
struct DetuningGrid {
    std::size_t n = std::size_t{1} << 16;
    double delta_max = 200.0;

    double spacing() const { return 2.0 * delta_max / static_cast<double>(n); }
    double delta(std::size_t k) const {
        return -delta_max + static_cast<double>(k) * spacing();
    }

    void validate() const {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("grid.n: must be even and >= 2");
        if (!(delta_max > 0.0))
            throw std::invalid_argument("grid.delta_max: must be > 0");
    }

    bool operator==(const DetuningGrid&) const = default;
};

/// Complex field amplitudes of the three spatial output channels.
struct ChannelFields {
    Complex coherent{};    // forward, interfering with the incident mode
    Complex incoherent{};  // forward, orthogonal to the incident mode
    Complex backward{};    // solid-angle complement of the aperture
};

struct ChannelPowers {
    double coherent = 0.0;
    double incoherent = 0.0;
    double backward = 0.0;

    double total() const { return coherent + incoherent + backward; }
};

enum class Channel { Coherent, Incoherent, Backward };

/// Per-channel complex spectra sampled on a detuning grid.
struct ChannelSpectra {
    DetuningGrid grid{};
    std::vector<Complex> coherent;
    std::vector<Complex> incoherent;
    std::vector<Complex> backward;
};

/// Coefficients of the coherent spectrum split into rising / decaying
/// exponential parts: s_coh = rising/(g/2 + i d) + decaying/(g/2 - i d).
struct ExpDecomposition {
    Complex rising_coeff{};
    Complex decaying_coeff{};
};

/// Complex temporal envelope samples in the carrier rotating frame.
struct TimeSignal {
    std::vector<double> times;
    std::vector<Complex> values;
};

}  // namespace atomscatter
