#pragma once

#include <span>
#include <string>
#include <vector>

#include "normsim/grid.hpp"
#include "normsim/kernel.hpp"

namespace normsim {

/// Updates that would land |mu| inside this band are pushed through to its
/// edge on the side they were heading (the Eq. 3 prefactor is singular at 0).
inline constexpr double kMuGuardBand = 1e-6;

struct CausalFact {
    std::string name;
    double effect_size = 0.0;   ///< between-period effect size (Cliff's delta scale)
    double causal_effect = 0.0; ///< estimated effect on the control variable
};

/// Net drive = sum of effect_size * causal_effect over the facts.
double net_causal_effect(std::span<const CausalFact> facts);

/// facts CSV: header `fact,effect_size_value,causal_effect`, one fact per row.
std::vector<CausalFact> load_facts_csv(const std::string& path);

struct TargetDrivenConfig {
    double eta = 0.01;            ///< learning rate
    double tau = 0.05;            ///< convergence threshold on d_avg
    double activation_time = 0.0; ///< adaptation begins at this simulation time

    void validate() const;
};

/// sigma <- clip(sigma + eta d_avg, ...), mu likewise, but only while
/// d_avg > tau. Keeps mu out of the guard band around zero.
KernelParams target_driven_update(const KernelParams& state, double d_avg,
                                  const TargetDrivenConfig& cfg);

/// 0.5 (1 + tanh(strength - 0.5)); strictly increasing, range (0, 1).
double adaptation_factor(double strength);

/// 1 + 0.01 t: causal effects double every 100 time units.
double time_amplification(double t_elapsed);

struct CausalDrive {
    double delta_mu = 0.0;
    double delta_sigma = 0.0;
};

/// mu += delta_mu * adaptation_factor(gradient_strength(G)) * dt *
/// time_amplification(t_elapsed), identically for sigma; clipped to bounds,
/// guard band enforced.
KernelParams causal_update(const KernelParams& state, const CausalDrive& drive,
                           std::span<const double> gradient, double dx, double dt,
                           double t_elapsed);

/// Which gradient strength feeds adaptation_factor in per-node mode: the
/// global L2 norm (every node gets the same increment) or a windowed local
/// norm around each node.
enum class StrengthMode { global, local };

void causal_update_field(KernelField& state, const CausalDrive& drive,
                         std::span<const double> gradient, const Grid& grid,
                         double dt, double t_elapsed,
                         StrengthMode mode = StrengthMode::global,
                         double strength_window = 1.0);

} // namespace normsim
