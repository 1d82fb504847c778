#pragma once

// Two-spin density-matrix propagation.
//
// The numeric route integrates the propagator U(t) of H_S(t) with a
// fourth-order Magnus stepper under step-doubling error control and forms
// rho(t) = U rho(0) U^dagger. The analytic route, for linear polarization
// (epsilon = 0), factors U = W X with W the product of the two single-spin
// precessions and X the interaction-picture evolution of the spin-spin term.

#include <cstddef>
#include <functional>
#include <vector>

#include "laserspin/spinfield.hpp"
#include "laserspin/types.hpp"

namespace laserspin {

class DensityMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPsdTolerance = 1e-10;

  /// Throws InvalidStateError unless m is Hermitian, unit-trace and PSD.
  explicit DensityMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }

  double purity() const;
  double trace_error() const;
  double hermiticity_error() const;
  /// Ascending eigenvalues of the Hermitian part.
  Eigen::Vector4d eigenvalues() const;

 private:
  Mat4 m_;
};

struct Propagator {
  Mat4 matrix;
  double t;

  /// max |U U^dagger - I|
  double unitarity_error() const;
};

using HamiltonianFn = std::function<Mat4(double)>;

/// exp(-i K) for Hermitian K via its eigendecomposition.
Mat4 unitary_exp(const Mat4& hermitian);
Mat2 unitary_exp(const Mat2& hermitian);

/// Adaptive propagator for dU/dt = -i H(t) U, U(0) = I.
class PropagatorIntegrator {
 public:
  /// tol bounds the local error per unit time; must lie in (1e-14, 1e-4).
  PropagatorIntegrator(HamiltonianFn hamiltonian, double tol);

  /// Integrates forward to t >= time(); throws IntegratorError on step underflow.
  void advance_to(double t);

  const Mat4& propagator() const { return u_; }
  double time() const { return t_; }
  std::size_t accepted_steps() const { return accepted_; }

 private:
  Mat4 magnus_step(double t0, double h) const;

  HamiltonianFn hamiltonian_;
  double tol_;
  double t_ = 0.0;
  double h_ = 0.0;
  Mat4 u_ = Mat4::Identity();
  std::size_t accepted_ = 0;
};

struct EvolutionSample {
  double t;
  DensityMatrix rho;
  double unitarity_error;
};

/// rho(t) on an increasing grid starting at t >= 0, with the unitarity defect of U(t).
std::vector<EvolutionSample> evolve(const DensityMatrix& rho0, const HamiltonianFn& hamiltonian,
                                    const std::vector<double>& t_grid, double tol);

std::vector<DensityMatrix> evolve_von_neumann(const DensityMatrix& rho0,
                                              const HamiltonianFn& hamiltonian,
                                              const std::vector<double>& t_grid, double tol);

Propagator propagator_numeric(const HamiltonianFn& hamiltonian, double t, double tol);

// ---- linear polarization (epsilon = 0) closed forms ------------------------
// Every function below throws DomainError when laser.epsilon != 0.

struct PrecessionAngles {
  double theta_n;
  double theta_p;
  double theta_minus;  ///< theta_n - theta_p
  double psi;          ///< integral of cos(theta_minus) from 0 to t
};

/// Single-spin precession angle about x,
///   2 theta = eta (g~ + 1) sn(u) - (eta gamma_z / mu) asin(mu sn(u)),
/// so that theta is the time integral of B_x.
double precession_angle(double t, Constituent which, const LaserParams& laser,
                        const KinematicParams& kin, const BoundStateParams& bound);

PrecessionAngles precession_angles(double t, const LaserParams& laser, const KinematicParams& kin,
                                   const BoundStateParams& bound);

/// exp((i/2) theta sigma_x)
Mat2 single_spin_propagator(double t, Constituent which, const LaserParams& laser,
                            const KinematicParams& kin, const BoundStateParams& bound);

/// W(t) = U_n(t) (x) U_p(t)
Mat4 local_propagator(double t, const LaserParams& laser, const KinematicParams& kin,
                      const BoundStateParams& bound);

/// W^dagger H_I W = kappa [s11 + cos(th-)(s22 + s33) + sin(th-) s[32]]
Mat4 interaction_picture_hamiltonian(double t, const LaserParams& laser,
                                     const KinematicParams& kin, const BoundStateParams& bound);

/// exp(i psi sigma.sigma) = e^{i psi}/2 + e^{-i psi}/2 [cos 2psi + i sigma.sigma sin 2psi]
Mat4 euler_representation(double psi);

/// Potential left after removing exp(-i kappa psi sigma.sigma) from X:
///   kappa [(1 - cos th-) s11 + sin th- (cos(4 kappa psi) s[32] + sin(4 kappa psi) s[01])]
Mat4 interaction_potential(double theta_minus, double psi, double kappa);

/// X(t) = exp(-i kappa psi sigma.sigma) T exp(-i int_0^t V_I), the ordered
/// exponential taken as a midpoint product refined by step doubling.
Mat4 time_ordered_X(double t, const LaserParams& laser, const KinematicParams& kin,
                    const BoundStateParams& bound);

/// U(t) = W(t) X(t)
Mat4 factorized_propagator(double t, const LaserParams& laser, const KinematicParams& kin,
                           const BoundStateParams& bound);

/// Leading-order change of a Werner state under the interaction potential,
///   -(1/2) kappa eta p Delta sin(w t) [cos(4 kappa t) s[10] + sin(4 kappa t) s[32]],
/// i.e. i [V_I, rho_W] with theta_- ~ (eta Delta / 2) sin(w t) and psi ~ t.
Mat4 perturbative_delta_rho_werner(double t, double p, const LaserParams& laser,
                                   const BoundStateParams& bound);

}  // namespace laserspin
