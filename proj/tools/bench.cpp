// Timing comparison of the parallel kernels against their serial reference
// implementations.

#include <chrono>
#include <cstdio>

#include "atomscatter/geometry.hpp"
#include "atomscatter/pulse.hpp"
#include "atomscatter/reference.hpp"

namespace as = atomscatter;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    for (int i = 0; i < reps; ++i)
        f();
    const auto t1 = clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s serial %10.3f ms   parallel %10.3f ms   speedup %5.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    const as::PulseParams pulse{};
    const as::CouplingParams coupling{.omega = 0.11, .eta = 0.9};
    const as::DetuningGrid grid{.n = std::size_t{1} << 20, .delta_max = 200.0};

    report("scatter_pulse",
           time_ms([&] { (void)as::ref::scatter_pulse(pulse, coupling, grid, 0.3); }, 5),
           time_ms([&] { (void)as::scatter_pulse(pulse, coupling, grid, 0.3); }, 5));

    const as::ChannelSpectra spectra = as::scatter_pulse(pulse, coupling, grid, 0.0);
    report("spectral_energy",
           time_ms([&] { (void)as::ref::spectral_energy(spectra.coherent, grid); }, 20),
           time_ms([&] { (void)as::spectral_energy(spectra.coherent, grid); }, 20));

    const as::DetuningGrid small{.n = 4096, .delta_max = 200.0};
    const as::ChannelSpectra sm = as::scatter_pulse(pulse, coupling, small, 0.0);
    const as::TransformPlan plan{.grid = small};
    report("inverse_transform(4096)",
           time_ms([&] { (void)as::ref::inverse_transform(sm.coherent, plan); }, 3),
           time_ms([&] { (void)as::inverse_transform(sm.coherent, plan); }, 3));

    const as::QuadratureSpec quad{.order = 512, .tolerance = 1e-10};
    report("weighted_solid_angle",
           time_ms([&] { (void)as::ref::weighted_solid_angle(as::DipolePattern::Linear,
                                                             as::AngularAperture::full_sphere(),
                                                             quad); },
                   5),
           time_ms([&] { (void)as::weighted_solid_angle(as::DipolePattern::Linear,
                                                        as::AngularAperture::full_sphere(),
                                                        quad); },
                   5));
    return 0;
}
