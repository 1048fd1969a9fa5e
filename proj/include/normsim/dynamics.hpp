#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <variant>

#include "normsim/grid.hpp"
#include "normsim/kernel.hpp"
#include "normsim/stability.hpp"

namespace normsim {

enum class PotentialActivation { always, never, count_at_least };

/// How the quadratic potential enters the transport equation.
/// `exact` is the flux form -grad V = -2k(x - x_target) in the drift velocity.
/// `linearized` is the near-target approximation used by the linear stability
/// analysis: the potential term reduces to a source +2k P. It is intended for
/// dispersion-validation runs on periodic grids (the exact flux is not
/// periodic); it does not conserve mass.
enum class PotentialMode { exact, linearized };

struct PotentialField {
    double k = 0.0;
    double x_target = 0.0;
    PotentialActivation activation = PotentialActivation::always;
    int count_threshold = 2;
    PotentialMode mode = PotentialMode::exact;
    /// Prominence threshold for the cluster count driving `count_at_least`.
    double min_rel_height = kDefaultMinRelHeight;

    void validate() const;
    bool active(std::size_t cluster_count) const;
};

struct StepControl {
    double dt_max = 0.05;
    double cfl_safety = 0.4;
    bool positivity_clip = true;

    void validate() const;
};

/// grad V = 2k (x - x_target).
double potential_gradient(double x, const PotentialField& pot);

/// Drift v_i = c G_i - grad V(x_i); the potential part only when its
/// activation predicate holds for `cluster_count` (and mode is exact).
std::vector<double> compute_velocity(const PopulationField& field,
                                     std::span<const double> gradient,
                                     const PhysicsParams& phys,
                                     const PotentialField& pot,
                                     std::size_t cluster_count);

using KernelState = std::variant<KernelParams, KernelField>;

struct SimState {
    PopulationField field;
    KernelState kernel;
    PhysicsParams physics;
    PotentialField potential;
    StepControl control;
    Topology topology = Topology::clamp;

    std::size_t step_count = 0;
    std::size_t clip_events = 0;
    /// Perceived gradient of the field as of the latest step.
    std::vector<double> last_gradient;
};

struct StepReport {
    double dt_actual = 0.0;
    bool clipped = false;
};

/// One explicit Euler step of the conservative flux form
///   dP/dt = -d/dx [ -d dP/dx + P v ]
/// with centered diffusion, first-order upwind advection on faces, and
/// zero-flux walls (clamp topology; wall cells have width dx/2 so the
/// trapezoid mass is conserved exactly). The actual dt is
/// min(dt_request, dt_max, cfl * dx^2/(2d), cfl * dx/(2 max|v|)).
/// Negative values are clipped to zero and the field renormalized when
/// positivity_clip is on. Throws BlowupError on non-finite values.
StepReport step(SimState& state, double dt_request);

struct RunResult {
    double t_end = 0.0;
    std::size_t steps = 0;
    std::size_t clip_events = 0;
};

using StepCallback = std::function<void(SimState&, const StepReport&)>;

/// Steps until field.time reaches t_end (the final step is clipped to land on
/// it exactly). The callback runs after every accepted step, serialized, and
/// may mutate the kernel state (adaptation) or inspect the field.
RunResult run(SimState& state, double t_end, const StepCallback& on_step = {});

} // namespace normsim
