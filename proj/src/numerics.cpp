#include "atomscatter/numerics.hpp"

#include <bit>
#include <cmath>

namespace atomscatter {

namespace {

constexpr double kPi = std::numbers::pi;

// Newton iteration on the Legendre recurrence; nodes filled symmetrically.
GaussLegendreRule compute_rule(unsigned order) {
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const unsigned half = (order + 1) / 2;
    for (unsigned i = 0; i < half; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(order) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (unsigned k = 2; k <= order; ++k) {
                const double p2 =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(order) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

// In-place radix-2 DIT FFT with kernel e^{-2pi i kj/n}.
void fft_pow2(std::vector<Complex>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        const Complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

}  // namespace

GaussLegendreRule gauss_legendre(unsigned order) {
    if (order < 2)
        throw std::invalid_argument("gauss_legendre: order must be >= 2");
    return compute_rule(order);
}

TimeSignal inverse_transform(std::span<const Complex> spectrum, const TransformPlan& plan) {
    plan.grid.validate();
    const std::size_t n = plan.grid.n;
    if (spectrum.size() != n)
        throw std::invalid_argument("inverse_transform: spectrum size does not match grid");

    const double d_delta = plan.grid.spacing();
    const double scale = d_delta / (2.0 * kPi);

    // delta_k t_j = delta_max t_j - 2pi k j / n + pi k, and delta_max t_j =
    // pi (j - n/2): both centering ramps are exact sign flips.
    std::vector<Complex> work(spectrum.begin(), spectrum.end());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 1; k < static_cast<std::ptrdiff_t>(n); k += 2)
        work[static_cast<std::size_t>(k)] = -work[static_cast<std::size_t>(k)];

    if (std::has_single_bit(n)) {
        fft_pow2(work);
    } else {
        std::vector<Complex> out(n);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k)
                acc += work[k] *
                       std::polar(1.0, -2.0 * kPi * static_cast<double>(k) *
                                           static_cast<double>(j) / static_cast<double>(n));
            out[static_cast<std::size_t>(j)] = acc;
        }
        work = std::move(out);
    }

    TimeSignal signal;
    signal.times.resize(n);
    signal.values.resize(n);
    const std::size_t half = n / 2;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        const auto uj = static_cast<std::size_t>(j);
        signal.times[uj] = plan.time(uj);
        const double ramp = ((uj + half) % 2 == 0) ? 1.0 : -1.0;
        signal.values[uj] = scale * ramp * work[uj];
    }
    return signal;
}

double spectral_energy(std::span<const Complex> spectrum, const DetuningGrid& grid) {
    grid.validate();
    if (spectrum.size() != grid.n)
        throw std::invalid_argument("spectral_energy: spectrum size does not match grid");
    double acc = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(grid.n);
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k)
        acc += std::norm(spectrum[static_cast<std::size_t>(k)]);
    // trapezoid end correction
    acc -= 0.5 * (std::norm(spectrum.front()) + std::norm(spectrum.back()));
    return acc * grid.spacing() / (2.0 * kPi);
}

double time_energy(const TimeSignal& signal) {
    if (signal.values.empty())
        return 0.0;
    if (signal.times.size() != signal.values.size())
        throw std::invalid_argument("time_energy: times/values size mismatch");
    const double dt = signal.times.size() > 1 ? signal.times[1] - signal.times[0] : 1.0;
    double acc = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(signal.values.size());
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j)
        acc += std::norm(signal.values[static_cast<std::size_t>(j)]);
    return acc * dt;
}

}  // namespace atomscatter
