#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace normsim {

inline constexpr double kVarianceFloor = 1e-3;

struct GaussianComponent {
    double weight = 1.0;
    double mean = 0.0;
    double variance = 1.0;

    bool operator==(const GaussianComponent&) const = default;
};

/// Weighted 1-D Gaussian mixture. Construction normalizes the weights and
/// clamps variances to kVarianceFloor (clamping is flagged, not an error).
class GaussianMixture {
public:
    explicit GaussianMixture(std::vector<GaussianComponent> components);

    std::span<const GaussianComponent> components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    bool variance_was_clamped() const { return variance_clamped_; }

    double density(double x) const;
    double cdf(double x) const;

    /// Inverse CDF by bisection on [-B, B], B = max|mean| + 10 max sigma;
    /// 60 iterations, giving ~1e-16 * bracket width, well under 1e-8.
    /// Throws ConfigError for p outside (0, 1).
    double quantile(double p) const;

    /// n component-weighted Gaussian draws, sorted ascending. Deterministic
    /// per seed.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    bool operator==(const GaussianMixture&) const = default;

private:
    std::vector<GaussianComponent> components_;
    bool variance_clamped_ = false;
};

/// Mixture file: one `weight mean variance` triple per line, '#' comments.
/// save_mixture writes 17 significant digits so load(save(m)) == m bit-exact.
GaussianMixture load_mixture(const std::string& path);
void save_mixture(const GaussianMixture& mixture, const std::string& path);

} // namespace normsim
