#pragma once

#include <numbers>
#include <vector>

#include "pendulum/vec3.hpp"

namespace pendulum {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Default tolerance for the sphere / tangency constraints.
inline constexpr double constraint_tol = 1e-10;

/// Physical constants of the pendulum. All strictly positive; the
/// constructor rejects anything else (the periodic-solution result
/// needs friction > 0, and the rest are masses and lengths).
struct PendulumParams {
    double mass;
    double gravity;
    double friction;
    double rod_length;

    PendulumParams(double mass, double gravity, double friction, double rod_length = 1.0);
};

/// Smooth periodic horizontal pivot trajectory (xi(t), eta(t), 0), stored
/// as truncated Fourier series so that derivatives are exact and
/// periodicity holds by construction.
///
/// Coefficient vectors are indexed by harmonic: xi_cos[k] multiplies
/// cos(2*pi*k*t/period). Index 0 is the constant offset (it never
/// contributes to velocity or acceleration). Missing tails are zero.
struct PivotMotion {
    double period = two_pi;
    std::vector<double> xi_cos;
    std::vector<double> xi_sin;
    std::vector<double> eta_cos;
    std::vector<double> eta_sin;

    PivotMotion() = default;
    PivotMotion(double period, std::vector<double> xi_cos, std::vector<double> xi_sin,
                std::vector<double> eta_cos, std::vector<double> eta_sin);

    /// Pivot at rest.
    static PivotMotion stationary(double period = two_pi);
    /// xi = amplitude*cos(2*pi*t/period), eta = amplitude*sin(2*pi*t/period).
    static PivotMotion circular(double amplitude, double period = two_pi);

    double xi(double t) const;
    double xi_dot(double t) const;
    double xi_ddot(double t) const;
    double eta(double t) const;
    double eta_dot(double t) const;
    double eta_ddot(double t) const;

    bool is_stationary() const;
};

/// Point of the constrained phase space, taken in the moving frame:
/// position on the sphere of radius rod_length, velocity tangent to it.
struct State {
    double time = 0.0;
    Vec3 position;
    Vec3 velocity;
};

/// ODE right-hand side container.
struct Derivative {
    Vec3 dposition;
    Vec3 dvelocity;
};

/// Sphere constraint: | ||r|| - l | <= tol.
bool on_sphere(const State& s, double rod_length, double tol = constraint_tol);

/// Tangency constraint: | r.v | <= tol * l * max(1, ||v||).
bool tangent_to_sphere(const State& s, double rod_length, double tol = constraint_tol);

/// Both constraints at once.
bool satisfies_constraints(const State& s, double rod_length, double tol = constraint_tol);

}  // namespace pendulum
