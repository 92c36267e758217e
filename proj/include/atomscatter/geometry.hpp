#pragma once

#include <numbers>

#include "atomscatter/numerics.hpp"
#include "atomscatter/types.hpp"

namespace atomscatter {

/// Angular intensity pattern of the transition dipole. Both patterns are
/// normalized so the full-sphere integral of I sin(theta) equals 8pi/3.
enum class DipolePattern { Linear, Circular };

struct AngularAperture {
    double theta_min = 0.0;
    double theta_max = std::numbers::pi;
    double phi_min = 0.0;
    double phi_max = 2.0 * std::numbers::pi;

    static AngularAperture full_sphere() { return {}; }

    void validate() const {
        if (!(theta_min >= 0.0 && theta_min <= theta_max && theta_max <= std::numbers::pi))
            throw std::invalid_argument("aperture.theta: need 0 <= theta_min <= theta_max <= pi");
        const double dphi = phi_max - phi_min;
        if (!(dphi >= 0.0 && dphi <= 2.0 * std::numbers::pi))
            throw std::invalid_argument("aperture.phi: need 0 <= phi_max - phi_min <= 2pi");
    }
};

struct SolidAngleEstimate {
    double value = 0.0;
    double error_estimate = 0.0;

    bool converged(double tolerance) const { return error_estimate <= tolerance; }
};

/// I(theta, phi): sin^2(theta) for Linear, (1 + cos^2(theta))/2 for Circular.
/// Throws std::domain_error for theta outside [0, pi].
double dipole_intensity(DipolePattern pattern, double theta, double phi);

/// Dipole-weighted solid-angle fraction of the aperture, normalized by
/// 8pi/3. The error estimate comes from doubling the quadrature order;
/// the returned value is the higher-order one, unclamped.
SolidAngleEstimate weighted_solid_angle(DipolePattern pattern, const AngularAperture& aperture,
                                        const QuadratureSpec& quad = {});

}  // namespace atomscatter
