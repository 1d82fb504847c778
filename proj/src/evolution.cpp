#include "laserspin/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "laserspin/pauli.hpp"

namespace laserspin {

// ---- density matrices -------------------------------------------------------

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
  if (!m.allFinite()) throw InvalidStateError("density matrix has non-finite entries");
  if (hermiticity_error() > kHermiticityTolerance) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  if (trace_error() > kTraceTolerance) throw InvalidStateError("density matrix trace is not 1");
  if (eigenvalues()(0) < -kPsdTolerance) {
    throw InvalidStateError("density matrix has a negative eigenvalue");
  }
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

double DensityMatrix::trace_error() const { return std::abs(m_.trace() - Complex(1.0, 0.0)); }

double DensityMatrix::hermiticity_error() const { return pauli::max_abs(m_ - m_.adjoint()); }

Eigen::Vector4d DensityMatrix::eigenvalues() const {
  const Mat4 hermitian = 0.5 * (m_ + m_.adjoint());
  return Eigen::SelfAdjointEigenSolver<Mat4>(hermitian, Eigen::EigenvaluesOnly).eigenvalues();
}

double Propagator::unitarity_error() const {
  return pauli::max_abs(matrix * matrix.adjoint() - Mat4::Identity());
}

// ---- numeric propagator -----------------------------------------------------

namespace {

template <typename M>
M unitary_exp_impl(const M& hermitian) {
  const Eigen::SelfAdjointEigenSolver<M> es(hermitian);
  const auto phases =
      (es.eigenvalues().array() * Complex(0.0, -1.0)).exp().matrix().asDiagonal();
  return es.eigenvectors() * phases * es.eigenvectors().adjoint();
}

}  // namespace

Mat4 unitary_exp(const Mat4& hermitian) { return unitary_exp_impl(hermitian); }
Mat2 unitary_exp(const Mat2& hermitian) { return unitary_exp_impl(hermitian); }

PropagatorIntegrator::PropagatorIntegrator(HamiltonianFn hamiltonian, double tol)
    : hamiltonian_(std::move(hamiltonian)), tol_(tol) {
  if (!(tol > 1e-14 && tol < 1e-4)) {
    throw DomainError("integrator tolerance must lie in (1e-14, 1e-4)");
  }
}

Mat4 PropagatorIntegrator::magnus_step(double t0, double h) const {
  // Two-point Gauss-Legendre Magnus expansion, fourth order.
  constexpr double kNodeOffset = 0.28867513459481288225;  // sqrt(3)/6
  const Mat4 h1 = hamiltonian_(t0 + (0.5 - kNodeOffset) * h);
  const Mat4 h2 = hamiltonian_(t0 + (0.5 + kNodeOffset) * h);
  constexpr double kCommutatorWeight = 0.14433756729740644113;  // sqrt(3)/12
  const Mat4 generator =
      0.5 * h * (h1 + h2) - Complex(0.0, kCommutatorWeight * h * h) * pauli::commutator(h2, h1);
  return unitary_exp(generator);
}

void PropagatorIntegrator::advance_to(double t) {
  if (t < t_) throw DomainError("propagator can only advance forward in time");
  if (h_ == 0.0) {
    const double scale = std::max(1.0, pauli::max_abs(hamiltonian_(t_)));
    h_ = 0.05 / scale;
  }
  while (t_ < t) {
    const double remaining = t - t_;
    const bool last = h_ >= remaining;
    const double h = last ? remaining : h_;
    const Mat4 full = magnus_step(t_, h);
    const Mat4 halves = magnus_step(t_ + 0.5 * h, 0.5 * h) * magnus_step(t_, 0.5 * h);
    const double err = pauli::max_abs(halves - full) / 15.0;
    const double allowed = tol_ * h;
    double factor = err > 0.0 ? 0.9 * std::pow(allowed / err, 0.25) : 4.0;
    factor = std::clamp(factor, 0.2, 4.0);
    if (err <= allowed) {
      u_ = halves * u_;
      // One Newton-Schulz sweep keeps roundoff from accumulating in U^dagger U.
      u_ = 0.5 * u_ * (3.0 * Mat4::Identity() - u_.adjoint() * u_);
      t_ = last ? t : t_ + h;
      ++accepted_;
      if (!last || factor < 1.0) h_ = h * factor;
    } else {
      h_ = h * factor;
      if (h_ < 1e-13 * std::max(1.0, std::abs(t_))) {
        throw IntegratorError("propagator step size underflow at t = " + std::to_string(t_));
      }
    }
  }
}

std::vector<EvolutionSample> evolve(const DensityMatrix& rho0, const HamiltonianFn& hamiltonian,
                                    const std::vector<double>& t_grid, double tol) {
  if (t_grid.empty()) return {};
  if (!(t_grid.front() >= 0.0)) throw DomainError("time grid must start at t >= 0");
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > t_grid[k - 1])) throw DomainError("time grid must be strictly increasing");
  }
  PropagatorIntegrator integrator(hamiltonian, tol);
  std::vector<EvolutionSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    integrator.advance_to(t);
    const Mat4& u = integrator.propagator();
    const Propagator prop{u, t};
    out.push_back({t, DensityMatrix(u * rho0.matrix() * u.adjoint()), prop.unitarity_error()});
  }
  return out;
}

std::vector<DensityMatrix> evolve_von_neumann(const DensityMatrix& rho0,
                                              const HamiltonianFn& hamiltonian,
                                              const std::vector<double>& t_grid, double tol) {
  std::vector<DensityMatrix> states;
  for (auto& s : evolve(rho0, hamiltonian, t_grid, tol)) states.push_back(std::move(s.rho));
  return states;
}

Propagator propagator_numeric(const HamiltonianFn& hamiltonian, double t, double tol) {
  if (!(t >= 0.0)) throw DomainError("propagator time must be >= 0");
  PropagatorIntegrator integrator(hamiltonian, tol);
  integrator.advance_to(t);
  return {integrator.propagator(), t};
}

// ---- linear polarization closed forms --------------------------------------

namespace {

void require_linear(const LaserParams& laser) {
  if (laser.epsilon != 0.0) {
    throw DomainError("interaction-picture closed forms need linear polarization (epsilon = 0)");
  }
}

double asin_ratio(double x) { return x == 0.0 ? 1.0 : std::asin(x) / x; }

double theta_minus_at(double t, const LaserParams& laser, const KinematicParams& kin,
                      const BoundStateParams& bound) {
  return precession_angle(t, Constituent::n, laser, kin, bound) -
         precession_angle(t, Constituent::p, laser, kin, bound);
}

// int_a^b cos(theta_-) on one short panel.
double psi_increment(double a, double b, const LaserParams& laser, const KinematicParams& kin,
                     const BoundStateParams& bound) {
  const auto f = [&](double s) { return std::cos(theta_minus_at(s, laser, kin, bound)); };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0);
}

double psi_at(double t, const LaserParams& laser, const KinematicParams& kin,
              const BoundStateParams& bound) {
  if (t == 0.0) return 0.0;
  const auto f = [&](double s) { return std::cos(theta_minus_at(s, laser, kin, bound)); };
  // Panels no wider than a quarter period of sn.
  const double quarter = elliptic::complete_K(kin.mu) / kin.omega_L_prime;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(t) / quarter)));
  const double width = t / panels;
  double total = 0.0;
  double error = 0.0;
  for (int k = 0; k < panels; ++k) {
    double e = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, k * width, (k + 1) * width, 15, 1e-14, &e);
    error += e;
  }
  if (!(error <= 1e-10)) throw IntegratorError("psi quadrature did not converge");
  return total;
}

}  // namespace

double precession_angle(double t, Constituent which, const LaserParams& laser,
                        const KinematicParams& kin, const BoundStateParams& bound) {
  require_linear(laser);
  const double sn = elliptic::jacobi(kin.omega_L_prime * t, kin.mu).sn;
  const double eta = laser.eta;
  const double mu = kin.mu.value();
  const double twice = eta * (bound.g_tilde(which) + 1.0) * sn -
                       eta * kin.gamma_z * sn * asin_ratio(mu * sn);
  return 0.5 * twice;
}

PrecessionAngles precession_angles(double t, const LaserParams& laser, const KinematicParams& kin,
                                   const BoundStateParams& bound) {
  require_linear(laser);
  const double tn = precession_angle(t, Constituent::n, laser, kin, bound);
  const double tp = precession_angle(t, Constituent::p, laser, kin, bound);
  return {tn, tp, tn - tp, psi_at(t, laser, kin, bound)};
}

Mat2 single_spin_propagator(double t, Constituent which, const LaserParams& laser,
                            const KinematicParams& kin, const BoundStateParams& bound) {
  const double theta = precession_angle(t, which, laser, kin, bound);
  return std::cos(0.5 * theta) * pauli::sigma(0) +
         Complex(0.0, std::sin(0.5 * theta)) * pauli::sigma(1);
}

Mat4 local_propagator(double t, const LaserParams& laser, const KinematicParams& kin,
                      const BoundStateParams& bound) {
  return pauli::kron(single_spin_propagator(t, Constituent::n, laser, kin, bound),
                     single_spin_propagator(t, Constituent::p, laser, kin, bound));
}

Mat4 interaction_picture_hamiltonian(double t, const LaserParams& laser,
                                     const KinematicParams& kin, const BoundStateParams& bound) {
  require_linear(laser);
  const double tm = theta_minus_at(t, laser, kin, bound);
  return bound.coupling_strength() *
         (pauli::product(1, 1) + std::cos(tm) * (pauli::product(2, 2) + pauli::product(3, 3)) +
          std::sin(tm) * pauli::antisymmetric(3, 2));
}

Mat4 euler_representation(double psi) {
  const Complex i(0.0, 1.0);
  const Mat4 id = Mat4::Identity();
  return 0.5 * std::exp(i * psi) * id +
         0.5 * std::exp(-i * psi) *
             (std::cos(2.0 * psi) * id + i * std::sin(2.0 * psi) * pauli::dot());
}

Mat4 interaction_potential(double theta_minus, double psi, double kappa) {
  const double phase = 4.0 * kappa * psi;
  return kappa * ((1.0 - std::cos(theta_minus)) * pauli::product(1, 1) +
                  std::sin(theta_minus) * (std::cos(phase) * pauli::antisymmetric(3, 2) +
                                           std::sin(phase) * pauli::antisymmetric(0, 1)));
}

namespace {

struct OrderedProduct {
  Mat4 value;
  double psi;
};

OrderedProduct ordered_product(double t, long steps, const LaserParams& laser,
                               const KinematicParams& kin, const BoundStateParams& bound) {
  const double kappa = bound.coupling_strength();
  const double h = t / static_cast<double>(steps);
  Mat4 y = Mat4::Identity();
  double psi = 0.0;
  for (long k = 0; k < steps; ++k) {
    const double a = k * h;
    const double mid = a + 0.5 * h;
    const double psi_mid = psi + psi_increment(a, mid, laser, kin, bound);
    const double tm = theta_minus_at(mid, laser, kin, bound);
    y = unitary_exp(Mat4(h * interaction_potential(tm, psi_mid, kappa))) * y;
    psi = psi_mid + psi_increment(mid, a + h, laser, kin, bound);
  }
  return {y, psi};
}

}  // namespace

Mat4 time_ordered_X(double t, const LaserParams& laser, const KinematicParams& kin,
                    const BoundStateParams& bound) {
  require_linear(laser);
  if (!(t >= 0.0)) throw DomainError("time_ordered_X needs t >= 0");
  const double kappa = bound.coupling_strength();
  if (t == 0.0) return Mat4::Identity();
  if (kappa == 0.0) return Mat4::Identity();

  double h_max = 0.01 / laser.omega_L;
  h_max = std::min(h_max, 0.01 / std::abs(kappa));
  long steps = std::max(1L, static_cast<long>(std::ceil(t / h_max)));
  constexpr double kTarget = 1e-9;
  constexpr long kMaxSteps = 1L << 22;

  OrderedProduct coarse = ordered_product(t, steps, laser, kin, bound);
  for (;;) {
    OrderedProduct fine = ordered_product(t, 2 * steps, laser, kin, bound);
    // Midpoint products converge at second order.
    const double err = pauli::max_abs(fine.value - coarse.value) / 3.0;
    if (err <= kTarget) return euler_representation(-kappa * fine.psi) * fine.value;
    steps *= 2;
    if (2 * steps > kMaxSteps) {
      throw IntegratorError("ordered exponential did not converge");
    }
    coarse = std::move(fine);
  }
}

Mat4 factorized_propagator(double t, const LaserParams& laser, const KinematicParams& kin,
                           const BoundStateParams& bound) {
  return local_propagator(t, laser, kin, bound) * time_ordered_X(t, laser, kin, bound);
}

Mat4 perturbative_delta_rho_werner(double t, double p, const LaserParams& laser,
                                   const BoundStateParams& bound) {
  require_linear(laser);
  const double kappa = bound.coupling_strength();
  const double amplitude =
      -0.5 * kappa * laser.eta * p * bound.delta() * std::sin(laser.omega_L * t);
  const double phase = 4.0 * kappa * t;
  return amplitude * (std::cos(phase) * pauli::antisymmetric(1, 0) +
                      std::sin(phase) * pauli::antisymmetric(3, 2));
}

}  // namespace laserspin
