#pragma once

#include <vector>

#include "pendulum/dynamics.hpp"
#include "pendulum/errors.hpp"
#include "pendulum/model.hpp"

namespace pendulum {

enum class Scheme { Rk4Projected };

/// Fixed-step integration settings. dt > 0 is checked here; the
/// resolution floor dt <= period/64 is enforced where the period is
/// known, at scenario load.
struct StepConfig {
    double dt;
    int projection_every = 1;
    Scheme scheme = Scheme::Rk4Projected;

    explicit StepConfig(double dt, int projection_every = 1,
                        Scheme scheme = Scheme::Rk4Projected);
};

struct TrajectoryDiagnostics {
    double max_radius_drift = 0.0;    ///< max | ||r|| - l | seen before projection
    double max_tangency_drift = 0.0;  ///< max | r.v | seen before projection
    double min_z = 0.0;
    double max_energy = 0.0;

    double max_constraint_drift() const {
        return max_radius_drift > max_tangency_drift ? max_radius_drift : max_tangency_drift;
    }
};

/// Uniformly sampled solution with its inputs and drift diagnostics.
/// Stored states are post-projection, so each satisfies the State
/// invariants; the drift fields record the raw integrator error.
struct Trajectory {
    std::vector<State> samples;
    PendulumParams params;
    PivotMotion pivot;
    TrajectoryDiagnostics diagnostics;
};

/// Divergence during integrate(); carries whatever was integrated before
/// the state stopped being finite.
class integration_failure : public divergence_error {
public:
    integration_failure(std::string what, double time, Trajectory partial)
        : divergence_error(std::move(what), time), partial_(std::move(partial)) {}
    const Trajectory& partial() const { return partial_; }

private:
    Trajectory partial_;
};

/// Rescale position to the sphere and remove the radial velocity
/// component. Idempotent to roundoff. Throws contract_error for a zero
/// position vector.
State project(const State& s, double rod_length);

/// One classical RK4 step of size cfg.dt from time t, projected back to
/// the constraint manifold when project_now is set. Deterministic.
/// Throws divergence_error if non-finite values appear.
State step(double t, const State& s, const StepConfig& cfg, const PendulumParams& params,
           const PivotMotion& pivot, bool project_now = true);

/// Repeated stepping over [t0, t1]; the final step is shortened to land
/// exactly on t1. t1 == t0 yields a single-sample trajectory. Throws
/// divergence_error (with the partial trajectory attached to the message
/// via its last valid time) when the state stops being finite.
Trajectory integrate(const State& s0, double t0, double t1, const StepConfig& cfg,
                     const PendulumParams& params, const PivotMotion& pivot);

}  // namespace pendulum
