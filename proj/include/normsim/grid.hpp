#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace normsim {

/// Uniform 1-D grid over the opinion axis. Node i sits at x_min + i*dx with
/// dx = (x_max - x_min) / (n_points - 1), so both endpoints are nodes.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;
    double dx = 0.0;

    Grid() = default;
    Grid(double x_min, double x_max, int n_points);

    double x(int i) const { return x_min + i * dx; }
    double width() const { return x_max - x_min; }

    /// Index of the node nearest to `pos` (clamped to the grid).
    int nearest(double pos) const;

    bool operator==(const Grid&) const = default;
};

/// Discretized population density P(x, t). Values are per unit opinion.
struct PopulationField {
    Grid grid;
    std::vector<double> values;
    double time = 0.0;

    PopulationField() = default;
    PopulationField(Grid grid, std::vector<double> values, double time = 0.0);

    /// Throws ConfigError on negative values, size mismatch, or zero mass.
    void validate() const;
};

/// Local maxima of a sampled curve. Parallel arrays, indices ascending.
struct PeakSet {
    std::vector<int> indices;
    std::vector<double> positions;
    std::vector<double> heights;
    std::vector<double> fwhm;

    std::size_t size() const { return indices.size(); }
    bool empty() const { return indices.empty(); }
};

/// Trapezoid quadrature of `values` on spacing dx.
double trapezoid(std::span<const double> values, double dx);

/// Total population mass, trapezoid rule. This is the exact invariant of the
/// zero-flux stepper (which uses half-width wall cells).
double total_mass(const PopulationField& field);

/// Strict local maxima (P[i] > P[i-1], P[i] >= P[i+1], interior nodes only)
/// of an arbitrary sampled curve, filtered by topographic prominence:
/// a peak is kept when its prominence is at least min_rel_height * max(curve).
/// FWHM comes from linearly interpolated half-max crossings; if a side never
/// crosses, the distance to that end of the curve is used instead.
PeakSet detect_peaks_curve(std::span<const double> xs, std::span<const double> ys,
                           double min_rel_height);

PeakSet detect_peaks(const PopulationField& field, double min_rel_height);

std::size_t count_clusters(const PopulationField& field, double min_rel_height);

/// Default prominence threshold used by cluster counting in scenarios.
inline constexpr double kDefaultMinRelHeight = 0.10;

} // namespace normsim
