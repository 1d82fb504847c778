#include "laserspin/spinfield.hpp"

#include <cmath>

#include "laserspin/pauli.hpp"

namespace laserspin {

double BoundStateParams::g_tilde(Constituent which) const {
  const bool n = which == Constituent::n;
  const double e = n ? charge_n : charge_p;
  const double m = n ? mass_n : mass_p;
  const double g = n ? g_n : g_p;
  return (e / m) * (M_B() / q_B) * g;
}

double BoundStateParams::coupling_strength() const {
  return convention == CouplingConvention::pauli ? g_coupling : 0.25 * g_coupling;
}

void BoundStateParams::validate() const {
  for (double v : {mass_n, mass_p, charge_n, charge_p, g_n, g_p, q_B, g_coupling}) {
    if (!std::isfinite(v)) throw DomainError("bound state: parameters must be finite");
  }
  if (!(mass_n > 0.0 && mass_p > 0.0)) throw DomainError("bound state: masses must be > 0");
  if (q_B == 0.0) throw DomainError("bound state: q_B must be nonzero");
}

void BoundStateParams::set_g_tilde(Constituent which, double value) {
  const bool n = which == Constituent::n;
  const double e = n ? charge_n : charge_p;
  const double m = n ? mass_n : mass_p;
  if (e == 0.0) throw DomainError("bound state: cannot set g~ of a neutral constituent");
  (n ? g_n : g_p) = value * m * q_B / (e * M_B());
}

void BoundStateParams::set_delta(double delta) {
  set_g_tilde(Constituent::p, g_tilde(Constituent::n) - delta);
}

EffectiveField effective_field(double t, Constituent which, const LaserParams& laser,
                               const KinematicParams& kin, const BoundStateParams& bound) {
  const auto j = elliptic::jacobi(kin.omega_L_prime * t, kin.mu);
  const double eps = laser.epsilon;
  const double eps_perp = std::sqrt((1.0 - eps) * (1.0 + eps));
  const double eta = laser.eta;
  const double gz = kin.gamma_z;
  const double mu2 = kin.mu.parameter();
  const double gt = bound.g_tilde(which);
  const double half_wp = 0.5 * kin.omega_L_prime;
  return {
      eta * half_wp * eps_perp * ((gt + 1.0) * j.dn - gz) * j.cn,
      eta * half_wp * eps * ((gt + 1.0) * j.dn - gz * (1.0 - mu2)) * j.sn,
      -eta * eta * 0.5 * laser.omega_L * eps * eps_perp * (gt - gz * j.dn),
  };
}

Vec3 omega_first_principles(double t, Constituent which, const LaserParams& laser,
                            const KinematicParams& kin, const BoundStateParams& bound) {
  const bool n = which == Constituent::n;
  const double e = n ? bound.charge_n : bound.charge_p;
  const double m = n ? bound.mass_n : bound.mass_p;
  const double g = n ? bound.g_n : bound.g_p;
  // wave_fields are reduced by q_B / M_B; undo that for the constituent.
  const double larmor = e * g * bound.M_B() / (2.0 * m * bound.q_B);

  const auto p = trajectory_point(t, laser, kin);
  const auto f = wave_fields(t, p.position, laser);
  return larmor * (f.B - p.velocity.cross(f.E)) + 0.5 * p.velocity.cross(p.acceleration);
}

Mat4 interaction_hamiltonian(const BoundStateParams& bound) {
  return bound.coupling_strength() * pauli::dot();
}

namespace {

Mat4 single_spin_terms(double t, const LaserParams& laser, const KinematicParams& kin,
                       const BoundStateParams& bound) {
  const Vec3 bn = effective_field(t, Constituent::n, laser, kin, bound).vector();
  const Vec3 bp = effective_field(t, Constituent::p, laser, kin, bound).vector();
  const Mat2 id = Mat2::Identity();
  return -0.5 * (pauli::kron(pauli::along(bn), id) + pauli::kron(id, pauli::along(bp)));
}

}  // namespace

Mat4 spin_hamiltonian(double t, const LaserParams& laser, const KinematicParams& kin,
                      const BoundStateParams& bound) {
  return single_spin_terms(t, laser, kin, bound) + interaction_hamiltonian(bound);
}

SpinHamiltonianSource::SpinHamiltonianSource(LaserParams laser, KinematicParams kin,
                                             BoundStateParams bound)
    : laser_(laser), kin_(kin), bound_(bound), interaction_(interaction_hamiltonian(bound)) {}

Mat4 SpinHamiltonianSource::operator()(double t) const {
  return single_spin_terms(t, laser_, kin_, bound_) + interaction_;
}

}  // namespace laserspin
