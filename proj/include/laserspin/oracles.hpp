#pragma once

// Independent reference computations used by the test suites and by the
// `validate` command. None of them shares a code path with the routine it
// checks: Jacobi values come from quadrature plus Newton inversion, the
// trajectory from direct ODE integration, propagators from uniform midpoint
// products, and exponentials from a scaled Taylor series.

#include "laserspin/elliptic.hpp"
#include "laserspin/evolution.hpp"
#include "laserspin/trajectory.hpp"

namespace laserspin::oracle {

/// F(phi | mu) = int_0^phi dtheta / sqrt(1 - mu^2 sin^2 theta) by adaptive Gauss-Kronrod.
double incomplete_F(double phi, double mu);

double complete_K_quadrature(double mu);

/// Solves F(phi | mu) = u for phi and returns sin, cos, sqrt(1 - mu^2 sin^2), phi.
elliptic::JacobiValues jacobi_by_inversion(double u, double mu);

struct MotionState {
  Vec3 position;
  Vec3 velocity;
};

/// Integrates the equation of motion from R(0) = 0 and the closed-form v(0)
/// with an adaptive Dormand-Prince 5(4) stepper.
MotionState integrate_motion(const LaserParams& laser, const KinematicParams& kin,
                             Dynamics dynamics, double t_end, double rtol);

/// Ordered product of `steps` uniform midpoint exponentials of -i H.
Mat4 product_propagator(const HamiltonianFn& hamiltonian, double t, long steps);

/// exp(A) by scaling and squaring a Taylor series.
Mat4 taylor_exp(const Mat4& a);

}  // namespace laserspin::oracle
