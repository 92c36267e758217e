#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "atomscatter/elastic.hpp"
#include "atomscatter/pulse.hpp"
#include "atomscatter/reference.hpp"

namespace as = atomscatter;
using as::Complex;

namespace {

constexpr double kPi = std::numbers::pi;
const as::PulseParams kPulse{.a0 = 1.0, .atom = {.gamma = 1.0}};

double rel_diff(Complex a, Complex b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("rising exponential spectrum") {
    CHECK(as::rising_exp_spectrum(kPulse, 0.0).real() == doctest::Approx(2.0));
    CHECK(as::rising_exp_spectrum(kPulse, 0.0).imag() == doctest::Approx(0.0));

    const Complex s = as::rising_exp_spectrum(kPulse, 0.5);
    CHECK(std::abs(s) == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::arg(s) == doctest::Approx(-kPi / 4));
}

TEST_CASE("decaying exponential spectrum is the conjugate pole") {
    CHECK(as::decaying_exp_spectrum(kPulse, 0.0).real() == doctest::Approx(2.0));
    CHECK(std::arg(as::decaying_exp_spectrum(kPulse, 0.5)) == doctest::Approx(kPi / 4));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ud(-30.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double d = ud(rng);
        CHECK(rel_diff(as::decaying_exp_spectrum(kPulse, d),
                       std::conj(as::rising_exp_spectrum(kPulse, d))) < 1e-15);
    }
}

TEST_CASE("scatter_pulse: closed-form examples") {
    const as::DetuningGrid grid{.n = 256, .delta_max = 8.0};

    SUBCASE("full coupling gives the negated decaying spectrum on resonance") {
        const auto s = as::scatter_pulse(kPulse, {.omega = 1.0, .eta = 1.0}, grid, 0.0);
        const std::size_t k0 = grid.n / 2;  // delta = 0
        CHECK(grid.delta(k0) == doctest::Approx(0.0));
        CHECK(s.coherent[k0].real() == doctest::Approx(-2.0).epsilon(1e-14));
        CHECK(rel_diff(s.coherent[k0], -as::decaying_exp_spectrum(kPulse, 0.0)) < 1e-14);
        CHECK(std::abs(s.backward[k0]) < 1e-15);
        CHECK(std::abs(s.incoherent[k0]) < 1e-15);
    }
    SUBCASE("backward amplitude at omega = 0.11") {
        const auto s = as::scatter_pulse(kPulse, {.omega = 0.11, .eta = 1.0}, grid, 0.0);
        const std::size_t k0 = grid.n / 2;
        CHECK(s.backward[k0].real() == doctest::Approx(0.0));
        CHECK(s.backward[k0].imag() ==
              doctest::Approx(4.0 * std::sqrt(0.11 * 0.89)).epsilon(1e-14));
    }
    SUBCASE("imaginary part of the coherent spectrum is -delta") {
        const auto s = as::scatter_pulse(kPulse, {.omega = 0.3, .eta = 0.8}, grid, 0.0);
        for (std::size_t k = 0; k < grid.n; ++k) {
            const double d = grid.delta(k);
            const double denom = d * d + 0.25;
            CHECK(s.coherent[k].imag() * denom == doctest::Approx(-d).epsilon(1e-12));
        }
    }
}

TEST_CASE("backward and incoherent spectra are purely imaginary with positive part") {
    const as::DetuningGrid grid{.n = 128, .delta_max = 20.0};
    const auto s = as::scatter_pulse(kPulse, {.omega = 0.6, .eta = 0.7}, grid, 0.0);
    for (std::size_t k = 0; k < grid.n; ++k) {
        CHECK(s.backward[k].real() == 0.0);
        CHECK(s.backward[k].imag() > 0.0);
        CHECK(s.incoherent[k].real() == 0.0);
        CHECK(s.incoherent[k].imag() > 0.0);
    }
}

TEST_CASE("parallel scatter_pulse matches the serial reference") {
    const as::DetuningGrid grid{.n = 1024, .delta_max = 40.0};
    const as::CouplingParams c{.omega = 0.37, .eta = 0.81};
    const auto par = as::scatter_pulse(kPulse, c, grid, 1.1);
    const auto ser = as::ref::scatter_pulse(kPulse, c, grid, 1.1);
    for (std::size_t k = 0; k < grid.n; ++k) {
        CHECK(par.coherent[k] == ser.coherent[k]);
        CHECK(par.incoherent[k] == ser.incoherent[k]);
        CHECK(par.backward[k] == ser.backward[k]);
    }
}

TEST_CASE("transfer consistency: pulse spectra from monochromatic channel fields") {
    // re-derives the pulse spectra by driving the steady-state partition with
    // the incident spectral amplitude and phase at every grid point
    const as::DetuningGrid grid{.n = 512, .delta_max = 25.0};
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> uphi(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const as::CouplingParams c{.omega = u01(rng), .eta = u01(rng)};
        const double phi0 = uphi(rng);
        const auto s = as::scatter_pulse(kPulse, c, grid, phi0);
        for (std::size_t k = 0; k < grid.n; ++k) {
            const double d = grid.delta(k);
            const double amp = kPulse.a0 / std::sqrt(d * d + 0.25);
            const double phase_in = std::atan(-2.0 * d);
            const as::DriveParams drive{
                .power = amp * amp, .phi0 = phi0 + phase_in, .saturation = 0.0};
            const auto f = as::channel_fields(drive, c, d, kPulse.atom);
            CHECK(rel_diff(f.coherent, s.coherent[k]) < 1e-12);
            CHECK(rel_diff(f.incoherent, s.incoherent[k]) < 1e-12);
            CHECK(rel_diff(f.backward, s.backward[k]) < 1e-12);
        }
    }
}

TEST_CASE("coherent decomposition: coefficients and pointwise reconstruction") {
    SUBCASE("limits") {
        const auto full = as::decompose_coherent(kPulse, {.omega = 1.0, .eta = 1.0});
        CHECK(std::abs(full.rising_coeff) < 1e-15);
        CHECK(full.decaying_coeff.real() == doctest::Approx(-1.0));

        const auto off = as::decompose_coherent(kPulse, {.omega = 0.0, .eta = 0.4});
        CHECK(off.rising_coeff.real() == doctest::Approx(1.0));
        CHECK(std::abs(off.decaying_coeff) < 1e-15);

        const auto part = as::decompose_coherent(kPulse, {.omega = 0.11, .eta = 1.0});
        CHECK(part.rising_coeff.real() == doctest::Approx(0.89));
        CHECK(part.decaying_coeff.real() == doctest::Approx(-0.11));
    }
    SUBCASE("reconstruction matches the coherent spectrum") {
        const as::DetuningGrid grid{.n = 512, .delta_max = 30.0};
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            const as::CouplingParams c{.omega = u01(rng), .eta = u01(rng)};
            const double phi0 = u01(rng) * 2.0 * kPi;
            const auto s = as::scatter_pulse(kPulse, c, grid, phi0);
            const auto dec = as::decompose_coherent(kPulse, c, phi0);
            for (std::size_t k = 0; k < grid.n; ++k) {
                const double d = grid.delta(k);
                const Complex rec = dec.rising_coeff / Complex{0.5, d} +
                                    dec.decaying_coeff / Complex{0.5, -d};
                CHECK(rel_diff(rec, s.coherent[k]) < 1e-12);
            }
        }
    }
}

TEST_CASE("absorbed fraction is omega eta^2") {
    CHECK(as::absorbed_fraction({.omega = 1.0, .eta = 1.0}) == doctest::Approx(1.0));
    CHECK(as::absorbed_fraction({.omega = 0.0, .eta = 0.7}) == doctest::Approx(0.0));
    CHECK(as::absorbed_fraction({.omega = 0.11, .eta = 1.0}) == doctest::Approx(0.11));
    CHECK(as::absorbed_fraction({.omega = 0.5, .eta = 0.5}) == doctest::Approx(0.125));
}

TEST_CASE("absorbed fraction by Parseval matches the analytic value") {
    const as::DetuningGrid grid{};  // default: n = 2^16, span 200 gamma
    for (double om : {0.11, 0.5, 1.0}) {
        for (double eta : {0.11, 0.5, 1.0}) {
            const as::CouplingParams c{.omega = om, .eta = eta};
            const double numeric = as::absorbed_fraction_parseval(kPulse, c, grid);
            CHECK(std::abs(numeric - as::absorbed_fraction(c)) <= 1e-3);
        }
    }
}

TEST_CASE("analytic time-domain envelopes") {
    SUBCASE("backward channel vanishes at full solid angle") {
        for (double t : {-3.0, 0.0, 2.5})
            CHECK(std::abs(as::analytic_time_domain(as::Channel::Backward, kPulse,
                                                    {.omega = 1.0, .eta = 1.0}, t)) < 1e-15);
    }
    SUBCASE("full coupling coherent envelope is a pure decay for t >= 0") {
        for (double t : {0.0, 0.3, 1.0, 4.0}) {
            const Complex v = as::analytic_time_domain(as::Channel::Coherent, kPulse,
                                                       {.omega = 1.0, .eta = 1.0}, t);
            CHECK(v.real() == doctest::Approx(-std::exp(-0.5 * t)).epsilon(1e-14));
            CHECK(v.imag() == doctest::Approx(0.0));
        }
    }
    SUBCASE("backward envelope at t = 0 for omega = 0.11") {
        const Complex v = as::analytic_time_domain(as::Channel::Backward, kPulse,
                                                   {.omega = 0.11, .eta = 1.0}, 0.0);
        CHECK(v.real() == doctest::Approx(0.0));
        CHECK(v.imag() == doctest::Approx(std::sqrt(0.0979)).epsilon(1e-12));
    }
    SUBCASE("decaying branch owns t = 0") {
        const as::CouplingParams c{.omega = 0.5, .eta = 0.9};
        const Complex at0 = as::analytic_time_domain(as::Channel::Coherent, kPulse, c, 0.0);
        CHECK(at0.real() == doctest::Approx(-0.5 * 0.81).epsilon(1e-14));
    }
    SUBCASE("double-sided channels are even in t") {
        const as::CouplingParams c{.omega = 0.3, .eta = 0.6};
        for (double t : {0.2, 1.7, 5.0}) {
            CHECK(as::analytic_time_domain(as::Channel::Backward, kPulse, c, t) ==
                  as::analytic_time_domain(as::Channel::Backward, kPulse, c, -t));
            CHECK(as::analytic_time_domain(as::Channel::Incoherent, kPulse, c, t) ==
                  as::analytic_time_domain(as::Channel::Incoherent, kPulse, c, -t));
        }
    }
}
