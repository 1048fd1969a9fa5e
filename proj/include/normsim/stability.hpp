#pragma once

#include <optional>
#include <vector>

#include "normsim/kernel.hpp"

namespace normsim {

struct PhysicsParams {
    double d = 0.2; ///< diffusion coefficient
    double c = 1.0; ///< migration gain on the perceived gradient

    void validate() const;
};

struct DispersionPoint {
    double omega = 0.0;
    double q_value = 0.0;
    double growth_rate = 0.0;
    bool unstable = false;
};

/// Q(omega) = integral sin(omega y)/omega g(y) dy by Simpson quadrature over
/// the truncated support |y| <= |mu| + 8 sigma.
double q_function(double omega, const KernelParams& params);

/// Closed form sin(omega mu) exp(-omega^2 sigma^2 / 2) / (omega mu); the sine
/// transform of the two shifted Gaussians. Agrees with q_function to ~1e-13.
double q_closed_form(double omega, const KernelParams& params);

/// Linear growth rate of a sinusoidal perturbation of the homogeneous level:
/// lambda = -d omega^2 + c omega^2 p_h Q(omega) + 2k.
double growth_rate(double omega, const KernelParams& params,
                   const PhysicsParams& phys, double p_h, double k);

/// Pattern-formation condition Q(omega) > (d - 2k/omega^2) / (c p_h).
/// Algebraically identical to growth_rate > 0. Throws ConfigError when
/// c * p_h <= 0 (unsupported regime).
bool instability_condition(double omega, const KernelParams& params,
                           const PhysicsParams& phys, double p_h, double k);

struct DispersionScan {
    std::vector<DispersionPoint> points;
    std::optional<std::size_t> most_unstable; ///< argmax growth rate, if any positive
};

DispersionScan dispersion_scan(double omega_min, double omega_max, int n_points,
                               const KernelParams& params, const PhysicsParams& phys,
                               double p_h, double k);

} // namespace normsim
