#include "laserspin/trajectory.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace laserspin {
namespace {

// asin(x) / x, continuous through 0.
double asin_ratio(double x) { return x == 0.0 ? 1.0 : std::asin(x) / x; }

// log1p(x) / x, continuous through 0.
double log1p_ratio(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

struct Polarization {
  double along_x;  // epsilon
  double along_y;  // sqrt(1 - epsilon^2)
};

Polarization polarization(const LaserParams& laser) {
  return {laser.epsilon, std::sqrt((1.0 - laser.epsilon) * (1.0 + laser.epsilon))};
}

}  // namespace

void LaserParams::validate() const {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw DomainError("laser: eta must be finite and >= 0");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw DomainError("laser: epsilon must lie in [0, 1]");
  }
  if (!(omega_L > 0.0) || !std::isfinite(omega_L)) {
    throw DomainError("laser: omega_L must be finite and > 0");
  }
}

KinematicParams modulus_from_params(const LaserParams& laser, double gamma_z) {
  laser.validate();
  if (!(gamma_z > 0.0) || !std::isfinite(gamma_z)) {
    throw DomainError("gamma_z must be finite and > 0");
  }
  double linear_weight = 1.0 - 2.0 * laser.epsilon * laser.epsilon;
  // 1/sqrt(2) itself rounds to a weight of either sign at the ulp level.
  if (std::abs(linear_weight) <= 4.0 * std::numeric_limits<double>::epsilon()) {
    linear_weight = 0.0;
  } else if (linear_weight < 0.0) {
    throw DomainError("epsilon^2 > 1/2 needs the modular extension of the trajectory");
  }
  const double mu = laser.eta * std::sqrt(linear_weight) / gamma_z;
  if (mu >= 1.0) {
    throw DomainError("laser intensity puts the modulus outside [0, 1): mu = " +
                      std::to_string(mu));
  }
  return {gamma_z, elliptic::Modulus(mu), gamma_z * laser.omega_L};
}

TrajectoryPoint trajectory_point(double t, const LaserParams& laser, const KinematicParams& kin) {
  const double u = kin.omega_L_prime * t;
  const auto j = elliptic::jacobi_all(u, kin.mu);
  const double mu = kin.mu.value();
  const auto pol = polarization(laser);
  const double eta = laser.eta;
  const double w = laser.omega_L;
  const double wp = kin.omega_L_prime;
  const double gz = kin.gamma_z;

  // sqrt(eps^2 / (1 - 2 eps^2)) asin(mu sn) and the log form of R_y are
  // rewritten through gamma_z mu = eta sqrt(1 - 2 eps^2) so that the circular
  // limit mu -> 0 stays finite.
  const double x_scale = pol.along_x * eta / (gz * w);
  const double y_scale = pol.along_y * eta / (gz * w);
  const double log_arg = ((j.cn - 1.0) - mu * j.sn * j.sn / (1.0 + j.dn)) / (1.0 + mu);

  TrajectoryPoint p;
  p.t = t;
  p.position = Vec3(-x_scale * j.sn * asin_ratio(mu * j.sn),
                    y_scale * log_arg * log1p_ratio(mu * log_arg),
                    t - j.am / w);
  p.velocity = Vec3(-eta * pol.along_x * j.cn, -eta * pol.along_y * j.sn, 1.0 - gz * j.dn);
  p.acceleration = Vec3(eta * pol.along_x * wp * j.sn * j.dn,
                        -eta * pol.along_y * wp * j.cn * j.dn,
                        gz * wp * mu * mu * j.sn * j.cn);
  return p;
}

Vec3 com_position(double t, const LaserParams& laser, const KinematicParams& kin) {
  return trajectory_point(t, laser, kin).position;
}

Vec3 com_velocity(double t, const LaserParams& laser, const KinematicParams& kin) {
  return trajectory_point(t, laser, kin).velocity;
}

Vec3 com_acceleration(double t, const LaserParams& laser, const KinematicParams& kin) {
  return trajectory_point(t, laser, kin).acceleration;
}

WaveFields wave_fields(double t, const Vec3& x, const LaserParams& laser) {
  const auto pol = polarization(laser);
  const double phase = laser.omega_L * (t - x.z());
  const double amp = laser.eta * laser.omega_L;
  const double s = std::sin(phase);
  const double c = std::cos(phase);
  return {Vec3(amp * pol.along_x * s, -amp * pol.along_y * c, 0.0),
          Vec3(amp * pol.along_y * c, amp * pol.along_x * s, 0.0)};
}

double equation_residual(double t, const LaserParams& laser, const KinematicParams& kin,
                         Dynamics dynamics) {
  const auto p = trajectory_point(t, laser, kin);
  const auto f = wave_fields(t, p.position, laser);
  const Vec3 force = f.E + p.velocity.cross(f.B);
  Vec3 rate = p.acceleration;
  if (dynamics == Dynamics::relativistic) {
    const double v2 = p.velocity.squaredNorm();
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    rate = gamma * p.acceleration +
           gamma * gamma * gamma * p.velocity.dot(p.acceleration) * p.velocity;
  }
  return (rate - force).cwiseAbs().maxCoeff();
}

double light_front_invariant(const Vec3& velocity) {
  return (1.0 - velocity.z()) / std::sqrt(1.0 - velocity.squaredNorm());
}

double newtonian_light_front_invariant(const Vec3& velocity) {
  const double lf = 1.0 - velocity.z();
  return lf * lf + velocity.x() * velocity.x() + velocity.y() * velocity.y();
}

namespace {

struct GeneratingIntegrand {
  Eigen::Vector2d pi_perp;
  double longitudinal;  // m - Pi_z
  double scale;         // e a = eta m
  double eps_x;
  double eps_y;
  double omega;

  double radicand(double u) const {
    const double phase = omega * u;
    const Eigen::Vector2d ea(scale * eps_x * std::cos(phase), scale * eps_y * std::sin(phase));
    const double w = -ea.squaredNorm() + 2.0 * ea.dot(pi_perp);
    return longitudinal * longitudinal + w;
  }

  double operator()(double u) const {
    const double r = radicand(u);
    if (r < 0.0) {
      throw IntegratorError("generating function integrand is not real at xi = " +
                            std::to_string(u));
    }
    return std::sqrt(r);
  }
};

GeneratingIntegrand make_integrand(const Eigen::Vector2d& pi_perp, double pi_z,
                                   const LaserParams& laser, double mass, double charge) {
  laser.validate();
  if (!(mass > 0.0)) throw DomainError("generating function: mass must be > 0");
  if (charge == 0.0) throw DomainError("generating function: charge must be nonzero");
  const double longitudinal = mass - pi_z;
  if (longitudinal == 0.0) throw DomainError("generating function: m - Pi_z must be nonzero");
  const auto pol = polarization(laser);
  return {pi_perp, longitudinal, laser.eta * mass, pol.along_x, pol.along_y, laser.omega_L};
}

}  // namespace

double generating_function(double xi, const Eigen::Vector2d& pi_perp, double pi_z,
                           const LaserParams& laser, double mass, double charge) {
  const auto f = make_integrand(pi_perp, pi_z, laser, mass, charge);
  if (xi == 0.0) return 0.0;
  constexpr double kAbsTol = 1e-10;
  double error = 0.0;
  // Panels of one wave period keep the Kronrod estimate local.
  const double period = 2.0 * kPi / laser.omega_L;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(xi) / period)));
  const double width = xi / panels;
  double integral = 0.0;
  for (int k = 0; k < panels; ++k) {
    double panel_error = 0.0;
    integral += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, k * width, (k + 1) * width, 15, 1e-14, &panel_error);
    error += panel_error;
  }
  if (!(error <= kAbsTol)) {
    throw IntegratorError("generating function quadrature did not converge");
  }
  return -f.longitudinal * xi + integral;
}

double generating_function_rate(double xi, const Eigen::Vector2d& pi_perp, double pi_z,
                                const LaserParams& laser, double mass, double charge) {
  const auto f = make_integrand(pi_perp, pi_z, laser, mass, charge);
  return f(xi) - f.longitudinal;
}

}  // namespace laserspin
