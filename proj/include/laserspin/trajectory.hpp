#pragma once

// Classical centre-of-mass motion of the bound state in an elliptically
// polarized plane wave travelling along +z.
//
// Natural units c = 1. Fields returned by wave_fields are reduced by the
// charge-to-mass ratio of the bound state, (q_B / M_B) (E, B), so their
// amplitude is eta * omega_L and the equation of motion reads
// dv/dt = E + v x B with no further constants.

#include <Eigen/Dense>

#include "laserspin/elliptic.hpp"
#include "laserspin/types.hpp"

namespace laserspin {

struct LaserParams {
  double eta = 0.0;      ///< dimensionless field strength
  double epsilon = 0.0;  ///< polarization, 0 linear along y, 1/sqrt(2) circular
  double omega_L = 1.0;  ///< angular frequency of the wave

  /// Throws DomainError unless eta >= 0, 0 <= epsilon <= 1, omega_L > 0.
  void validate() const;
};

struct KinematicParams {
  double gamma_z;  ///< Doppler factor 1 - v_z(0)
  elliptic::Modulus mu;
  double omega_L_prime;  ///< gamma_z * omega_L
};

struct TrajectoryPoint {
  double t;
  Vec3 position;
  Vec3 velocity;
  Vec3 acceleration;
};

struct WaveFields {
  Vec3 E;
  Vec3 B;
};

/// gamma_z^2 mu^2 = (1 - 2 epsilon^2) eta^2. Requires epsilon <= 1/sqrt(2) and
/// a resulting mu < 1.
KinematicParams modulus_from_params(const LaserParams& laser, double gamma_z);

Vec3 com_position(double t, const LaserParams& laser, const KinematicParams& kin);
Vec3 com_velocity(double t, const LaserParams& laser, const KinematicParams& kin);
Vec3 com_acceleration(double t, const LaserParams& laser, const KinematicParams& kin);

/// Position, velocity and acceleration from a single elliptic evaluation.
TrajectoryPoint trajectory_point(double t, const LaserParams& laser, const KinematicParams& kin);

/// Reduced plane-wave fields at lab time t and position x.
WaveFields wave_fields(double t, const Vec3& x, const LaserParams& laser);

enum class Dynamics {
  newtonian,     ///< dv/dt = E + v x B
  relativistic,  ///< d(gamma v)/dt = E + v x B
};

/// Max-norm residual of the chosen equation of motion along the closed-form
/// trajectory at time t, in units of c * omega_L.
double equation_residual(double t, const LaserParams& laser, const KinematicParams& kin,
                         Dynamics dynamics);

/// Residual of the relativistic Lorentz equation d(gamma v)/dt = E + v x B.
inline double lorentz_residual(double t, const LaserParams& laser, const KinematicParams& kin) {
  return equation_residual(t, laser, kin, Dynamics::relativistic);
}

/// gamma (1 - v_z): conserved by relativistic motion in any plane wave.
double light_front_invariant(const Vec3& velocity);

/// (1 - v_z)^2 + |v_perp|^2: conserved by the Newtonian Lorentz-force motion.
double newtonian_light_front_invariant(const Vec3& velocity);

/// Hamilton-Jacobi generating function
///   F = -(m - Pi_z) xi + int_0^xi sqrt((m - Pi_z)^2 + W(u, Pi_perp)) du,
///   W = -e^2 A_perp^2 + 2 e A_perp . Pi_perp,
/// with the field amplitude fixed by eta^2 = e^2 a^2 / m^2.
/// Throws IntegratorError if the integrand turns imaginary or quadrature fails.
double generating_function(double xi, const Eigen::Vector2d& pi_perp, double pi_z,
                           const LaserParams& laser, double mass, double charge);

/// dF/dxi at fixed canonical momenta (the integrand minus (m - Pi_z)).
double generating_function_rate(double xi, const Eigen::Vector2d& pi_perp, double pi_z,
                                const LaserParams& laser, double mass, double charge);

}  // namespace laserspin
