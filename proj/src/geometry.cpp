#include "atomscatter/geometry.hpp"

#include <cmath>

namespace atomscatter {

namespace {

constexpr double kFullSphereNorm = 8.0 * std::numbers::pi / 3.0;

double intensity_unchecked(DipolePattern pattern, double theta) {
    const double c = std::cos(theta);
    switch (pattern) {
        case DipolePattern::Linear:
            return 1.0 - c * c;
        case DipolePattern::Circular:
            return 0.5 * (1.0 + c * c);
    }
    throw std::invalid_argument("dipole_intensity: unknown pattern");
}

double integrate(DipolePattern pattern, const AngularAperture& ap, unsigned order) {
    const GaussLegendreRule rule = gauss_legendre(order);
    const double th_c = 0.5 * (ap.theta_max + ap.theta_min);
    const double th_h = 0.5 * (ap.theta_max - ap.theta_min);
    const double dphi = ap.phi_max - ap.phi_min;

    // both patterns are phi independent, but the product rule is kept so the
    // routine stays correct if a phi-dependent pattern is ever added
    const double ph_h = 0.5 * dphi;
    double acc = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(order);
#pragma omp parallel for reduction(+ : acc) schedule(static) collapse(2)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uj = static_cast<std::size_t>(j);
            const double theta = th_c + th_h * rule.nodes[ui];
            acc += rule.weights[ui] * rule.weights[uj] *
                   intensity_unchecked(pattern, theta) * std::sin(theta);
        }
    }
    return acc * th_h * ph_h;
}

}  // namespace

double dipole_intensity(DipolePattern pattern, double theta, double /*phi*/) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("dipole_intensity: theta must be in [0, pi]");
    return intensity_unchecked(pattern, theta);
}

SolidAngleEstimate weighted_solid_angle(DipolePattern pattern, const AngularAperture& aperture,
                                        const QuadratureSpec& quad) {
    aperture.validate();
    quad.validate();
    const double coarse = integrate(pattern, aperture, quad.order);
    const double fine = integrate(pattern, aperture, 2 * quad.order);
    SolidAngleEstimate est;
    est.value = fine / kFullSphereNorm;
    est.error_estimate = std::abs(fine - coarse) / kFullSphereNorm;
    return est;
}

}  // namespace atomscatter
