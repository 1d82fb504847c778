#include "laserspin/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "laserspin/pauli.hpp"

namespace laserspin {
namespace {

void require_werner_range(double p) {
  if (!(p >= -1.0 / 3.0 && p <= 1.0)) {
    throw DomainError("Werner parameter must lie in [-1/3, 1]");
  }
}

// sin^2(freq t / 2) / freq with the removable singularity at freq = 0.
double resonant_term(double freq, double t, double omega_L) {
  if (std::abs(freq) < 1e-8 * omega_L) {
    const double x = 0.5 * freq * t;
    const double x2 = x * x;
    return 0.25 * freq * t * t * (1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 45.0);
  }
  const double s = std::sin(0.5 * freq * t);
  return s * s / freq;
}

}  // namespace

DensityMatrix werner_state(double p) {
  require_werner_range(p);
  return DensityMatrix(0.25 * (Mat4::Identity() - p * pauli::dot()));
}

DensityMatrix product_state(double alpha, double beta) {
  if (!(std::abs(alpha) <= 1.0 && std::abs(beta) <= 1.0)) {
    throw DomainError("product state needs |alpha| <= 1 and |beta| <= 1");
  }
  const Mat4 m = 0.25 * (Mat4::Identity() +
                         0.5 * alpha * (pauli::product(0, 3) + pauli::product(3, 0)) +
                         0.5 * beta * (pauli::product(0, 3) - pauli::product(3, 0)));
  return DensityMatrix(m);
}

double wootters_margin(const DensityMatrix& rho) {
  const Mat4 flip = pauli::product(2, 2);
  const Mat4& r = rho.matrix();
  const Mat4 tilde = flip * r.conjugate() * flip;
  const Eigen::ComplexEigenSolver<Mat4> es(r * tilde, false);
  std::array<double, 4> lambda{};
  for (int k = 0; k < 4; ++k) {
    lambda[k] = std::sqrt(std::max(0.0, es.eigenvalues()(k).real()));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda[0] - lambda[1] - lambda[2] - lambda[3];
}

double wootters_concurrence(const DensityMatrix& rho) { return std::max(0.0, wootters_margin(rho)); }

double q_factor(double t, double omega_L, double g) {
  return resonant_term(omega_L + 4.0 * g, t, omega_L) + resonant_term(omega_L - 4.0 * g, t, omega_L);
}

double concurrence_product_analytic(double t, double alpha, double beta, double eta, double g,
                                    double delta, double omega_L) {
  if (!(std::abs(alpha) <= 1.0 && std::abs(beta) <= 1.0)) {
    throw DomainError("product state needs |alpha| <= 1 and |beta| <= 1");
  }
  const double drive = 4.0 * eta * std::abs(beta * g * delta * q_factor(t, omega_L, g));
  return std::max(0.0, drive - std::sqrt((1.0 - alpha) * (1.0 + alpha)));
}

double concurrence_werner_analytic(double p) {
  require_werner_range(p);
  return std::max(0.0, 0.5 * (3.0 * p - 1.0));
}

}  // namespace laserspin
