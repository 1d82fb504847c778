#include "laserspin/oracles.hpp"

#include <array>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

namespace laserspin::oracle {

double incomplete_F(double phi, double mu) {
  const double m = mu * mu;
  const auto f = [m](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - m * s * s);
  };
  const double panel = 0.25 * kPi;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(phi) / panel)));
  const double width = phi / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, k * width, (k + 1) * width, 6, 1e-14);
  }
  return total;
}

double complete_K_quadrature(double mu) { return incomplete_F(0.5 * kPi, mu); }

elliptic::JacobiValues jacobi_by_inversion(double u, double mu) {
  const double m = mu * mu;
  double phi = 0.5 * kPi * u / complete_K_quadrature(mu);
  for (int it = 0; it < 60; ++it) {
    const double s = std::sin(phi);
    const double step = (incomplete_F(phi, mu) - u) * std::sqrt(1.0 - m * s * s);
    phi -= step;
    if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(phi))) break;
  }
  const double s = std::sin(phi);
  return {s, std::cos(phi), std::sqrt(1.0 - m * s * s), phi};
}

MotionState integrate_motion(const LaserParams& laser, const KinematicParams& kin,
                             Dynamics dynamics, double t_end, double rtol) {
  using State = std::array<double, 6>;
  namespace ode = boost::numeric::odeint;

  const Vec3 v0 = com_velocity(0.0, laser, kin);
  const bool relativistic = dynamics == Dynamics::relativistic;
  const double gamma0 = relativistic ? 1.0 / std::sqrt(1.0 - v0.squaredNorm()) : 1.0;
  State x{0.0, 0.0, 0.0, gamma0 * v0.x(), gamma0 * v0.y(), gamma0 * v0.z()};

  const auto velocity_of = [relativistic](const State& s) {
    const Vec3 p(s[3], s[4], s[5]);
    return relativistic ? Vec3(p / std::sqrt(1.0 + p.squaredNorm())) : p;
  };
  const auto rhs = [&](const State& s, State& ds, double t) {
    const Vec3 pos(s[0], s[1], s[2]);
    const Vec3 v = velocity_of(s);
    const auto f = wave_fields(t, pos, laser);
    const Vec3 force = f.E + v.cross(f.B);
    for (int k = 0; k < 3; ++k) {
      ds[k] = v(k);
      ds[k + 3] = force(k);
    }
  };
  ode::integrate_adaptive(ode::make_controlled<ode::runge_kutta_dopri5<State>>(rtol * 1e-2, rtol),
                          rhs, x, 0.0, t_end, 1e-3 / laser.omega_L);
  return {Vec3(x[0], x[1], x[2]), velocity_of(x)};
}

Mat4 taylor_exp(const Mat4& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat4 scaled = a / std::ldexp(1.0, squarings);
  Mat4 sum = Mat4::Identity();
  Mat4 term = Mat4::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

Mat4 product_propagator(const HamiltonianFn& hamiltonian, double t, long steps) {
  const double h = t / static_cast<double>(steps);
  Mat4 u = Mat4::Identity();
  for (long k = 0; k < steps; ++k) {
    u = taylor_exp(Complex(0.0, -h) * hamiltonian((static_cast<double>(k) + 0.5) * h)) * u;
  }
  return u;
}

}  // namespace laserspin::oracle
