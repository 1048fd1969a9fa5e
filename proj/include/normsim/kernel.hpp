#pragma once

#include <span>
#include <vector>

#include "normsim/grid.hpp"

namespace normsim {

struct KernelBounds {
    double mu_min = -10.0;
    double mu_max = 10.0;
    double sigma_min = 1e-3;
    double sigma_max = 10.0;

    void validate() const;
    bool operator==(const KernelBounds&) const = default;
};

/// Difference-of-Gaussians perception kernel parameters. mu is the attention
/// offset (negative = auto-avoidance, positive = auto-aggregation), sigma the
/// information-gathering breadth.
struct KernelParams {
    double mu = 0.5;
    double sigma = 1.0;
    KernelBounds bounds;

    KernelParams() = default;
    KernelParams(double mu, double sigma);
    KernelParams(double mu, double sigma, KernelBounds bounds);

    void validate() const;
};

/// One (mu, sigma) pair per grid node, sharing one set of bounds.
struct KernelField {
    std::vector<double> mu;
    std::vector<double> sigma;
    KernelBounds bounds;

    KernelField() = default;
    KernelField(int n_points, const KernelParams& uniform);

    void validate() const;
};

enum class Topology { clamp, periodic };

/// g(y): odd difference of two Gaussians centered at +-mu, prefactor 1/(2 mu).
/// Throws ConfigError when mu == 0 exactly (the prefactor is singular; use a
/// small nonzero mu for the limit).
double eval_kernel(double y, const KernelParams& params);

/// Quadrature of the kernel's first moment over |y| <= |mu| + 8 sigma.
/// Analytically this is 1 for every valid parameter set.
double first_moment(const KernelParams& params);

/// Half-width of the truncated kernel support, |mu| + 6 sigma.
double kernel_support_radius(const KernelParams& params);

/// Perceived gradient G_i = sum_j P(x_i + j dx) g(j dx) dx over the truncated
/// support. Out-of-domain samples use the boundary value (clamp) or wrap
/// (periodic). `spectral` switches the periodic path to an FFT evaluation;
/// it is only legal with periodic topology.
/// Throws ConfigError if the kernel support is wider than the domain.
std::vector<double> nonlocal_gradient(const PopulationField& field,
                                      const KernelParams& params,
                                      Topology topology = Topology::clamp,
                                      bool spectral = false);

/// Per-node kernels; direct summation, each node with its own weights.
std::vector<double> nonlocal_gradient(const PopulationField& field,
                                      const KernelField& params,
                                      Topology topology = Topology::clamp);

/// L2 norm sqrt(integral G^2 dx), trapezoid quadrature.
double gradient_strength(std::span<const double> gradient, double dx);

} // namespace normsim
