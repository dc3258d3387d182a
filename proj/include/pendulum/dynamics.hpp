#pragma once

#include "pendulum/model.hpp"

namespace pendulum {

/// Pivot acceleration rho''(t) = (xi''(t), eta''(t), 0). The third
/// component is exactly zero: the pivot moves in the horizontal plane.
Vec3 pivot_accel(const PivotMotion& pivot, double t);

/// Signed magnitude of the rod force, i.e. the unique multiplier lambda
/// such that the acceleration keeps d/dt (r.v) == 0 on the sphere:
///
///   lambda = m * (g*z + xi''*x + eta''*y - ||v||^2) / l
///
/// Positive lambda pushes outward (rod under compression), negative pulls
/// inward (rod under tension).
double constraint_multiplier(const State& s, const PendulumParams& params,
                             const PivotMotion& pivot, double t);

/// Right-hand side of the moving-frame equation of motion
///
///   r' = v
///   v' = (lambda/(m*l)) r - g e_z - rho''(t) - (gamma/m) v
double kinetic_energy(const State& s, const PendulumParams& params);

Derivative vector_field(double t, const State& s, const PendulumParams& params,
                        const PivotMotion& pivot);

/// Instantaneous rate of change of the moving-frame kinetic energy,
/// m * (v' . v). Equals -m g vz - m (rho'' . v) - gamma ||v||^2 because
/// the rod force is orthogonal to v.
double energy_rate(double t, const State& s, const PendulumParams& params,
                   const PivotMotion& pivot);

/// Vertical acceleration for a state on the horizontal face (z ~ 0,
/// vz ~ 0). For exact z = 0, vz = 0 this is -g identically, whatever the
/// pivot does. Throws contract_error when called away from the face.
double vertical_acceleration_at_horizontal(double t, const State& s,
                                           const PendulumParams& params,
                                           const PivotMotion& pivot, double tol = 1e-8);

}  // namespace pendulum
