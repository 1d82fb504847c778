#pragma once

// Effective two-spin Hamiltonian along the centre-of-mass trajectory
// (hbar = 1, S = sigma / 2):
//
//   H_S(t) = -B_n(t) . S (x) I - I (x) S . B_p(t) + H_I,   H_I = kappa sigma.sigma
//
// Both constituents ride the centre-of-mass trajectory (relative motion frozen).

#include "laserspin/trajectory.hpp"
#include "laserspin/types.hpp"

namespace laserspin {

enum class Constituent { n, p };

/// How the spin-spin constant g maps onto the coefficient kappa of sigma.sigma.
enum class CouplingConvention {
  pauli,          ///< H_I = g sigma.sigma; singlet-triplet splitting 4g
  spin_operator,  ///< H_I = g S.S = (g/4) sigma.sigma; splitting g
};

struct BoundStateParams {
  double mass_n = 1.0;
  double mass_p = 1.0;
  double charge_n = 1.0;
  double charge_p = 1.0;
  double g_n = 2.0;  ///< bare gyromagnetic ratios
  double g_p = 2.0;
  double q_B = 2.0;  ///< signed bound-state charge entering eta = q_B a / M_B
  double g_coupling = 0.0;
  CouplingConvention convention = CouplingConvention::pauli;

  double M_B() const { return mass_n + mass_p; }
  /// g~ = (e / m) (M_B / q_B) g
  double g_tilde(Constituent which) const;
  /// Delta = g~_n - g~_p
  double delta() const { return g_tilde(Constituent::n) - g_tilde(Constituent::p); }
  /// Coefficient kappa of sigma.sigma in H_I.
  double coupling_strength() const;

  /// Throws DomainError on non-positive masses, zero q_B or non-finite values.
  void validate() const;

  /// Sets g_p so that Delta takes the requested value; needs charge_p != 0.
  void set_delta(double delta);
  /// Rescaled ratios are set directly through the bare ones.
  void set_g_tilde(Constituent which, double value);
};

struct EffectiveField {
  double Bx;
  double By;
  double Bz;

  Vec3 vector() const { return {Bx, By, Bz}; }
};

/// Closed-form precession vector; B_x ~ cn, B_y ~ sn, B_z ~ const + dn.
EffectiveField effective_field(double t, Constituent which, const LaserParams& laser,
                               const KinematicParams& kin, const BoundStateParams& bound);

/// Larmor plus Thomas precession from the bare ratio,
///   (e g / 2m)(B - v x E) + (1/2) v x a,
/// with v, a, E, B taken along the closed-form trajectory.
Vec3 omega_first_principles(double t, Constituent which, const LaserParams& laser,
                            const KinematicParams& kin, const BoundStateParams& bound);

Mat4 interaction_hamiltonian(const BoundStateParams& bound);

Mat4 spin_hamiltonian(double t, const LaserParams& laser, const KinematicParams& kin,
                      const BoundStateParams& bound);

/// Time-dependent H_S(t) with the parameters bound in.
class SpinHamiltonianSource {
 public:
  SpinHamiltonianSource(LaserParams laser, KinematicParams kin, BoundStateParams bound);

  Mat4 operator()(double t) const;

  const LaserParams& laser() const { return laser_; }
  const KinematicParams& kinematics() const { return kin_; }
  const BoundStateParams& bound() const { return bound_; }

 private:
  LaserParams laser_;
  KinematicParams kin_;
  BoundStateParams bound_;
  Mat4 interaction_;
};

}  // namespace laserspin
