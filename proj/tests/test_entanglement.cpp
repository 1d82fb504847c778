#include <doctest.h>

#include <cmath>
#include <random>

#include "laserspin/entanglement.hpp"
#include "laserspin/pauli.hpp"

using namespace laserspin;

namespace {

Mat2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  const Vec3 axis = Vec3(n(rng), n(rng), n(rng)).normalized();
  const double angle = 3.0 * n(rng);
  const double phase = n(rng);
  return std::polar(1.0, phase) * (std::cos(angle) * Mat2::Identity() +
                                   Complex(0, std::sin(angle)) * pauli::along(axis));
}

DensityMatrix random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Complex(n(rng), n(rng));
  Mat4 rho = a * a.adjoint();
  rho /= rho.trace();
  return DensityMatrix(Mat4(0.5 * (rho + rho.adjoint())));
}

Mat2 partial_trace_second(const Mat4& m) {
  Mat2 r = Mat2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) r(a, b) += m(2 * a + k, 2 * b + k);
  return r;
}

Mat2 partial_trace_first(const Mat4& m) {
  Mat2 r = Mat2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) r(a, b) += m(2 * k + a, 2 * k + b);
  return r;
}

}  // namespace

TEST_CASE("werner states") {
  CHECK(pauli::max_abs(werner_state(0.0).matrix() - Mat4::Identity() / 4.0) == 0.0);

  Mat4 singlet = Mat4::Zero();
  singlet(1, 1) = singlet(2, 2) = 0.5;
  singlet(1, 2) = singlet(2, 1) = -0.5;
  CHECK(pauli::max_abs(werner_state(1.0).matrix() - singlet) < 1e-16);
  CHECK(wootters_concurrence(werner_state(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(werner_state(0.5)) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(wootters_concurrence(werner_state(0.8)) == doctest::Approx(0.7).epsilon(1e-12));

  for (double p : {-1.0 / 3.0, -0.1, 0.2, 1.0 / 3.0, 0.6, 1.0}) {
    const Eigen::Vector4d ev = werner_state(p).eigenvalues();
    Eigen::Vector4d expected;
    expected << (1 - p) / 4, (1 - p) / 4, (1 - p) / 4, (1 + 3 * p) / 4;
    std::sort(expected.data(), expected.data() + 4);
    CHECK((ev - expected).cwiseAbs().maxCoeff() < 1e-15);
    const double c = wootters_concurrence(werner_state(p));
    CHECK(std::abs(c - concurrence_werner_analytic(p)) < 1e-12);
    CHECK((c > 1e-12) == (p > 1.0 / 3.0 + 1e-9));
  }
  CHECK_THROWS_AS(werner_state(1.01), DomainError);
  CHECK_THROWS_AS(werner_state(-0.34), DomainError);
}

TEST_CASE("analytic Werner concurrence") {
  CHECK(concurrence_werner_analytic(1.0 / 3.0) == doctest::Approx(0.0));
  CHECK(concurrence_werner_analytic(1.0) == 1.0);
  CHECK(concurrence_werner_analytic(0.0) == 0.0);
  CHECK(concurrence_werner_analytic(0.8) == doctest::Approx(0.7));
  CHECK_THROWS_AS(concurrence_werner_analytic(1.2), DomainError);
}

TEST_CASE("product states") {
  CHECK(pauli::max_abs(product_state(0.0, 0.0).matrix() - Mat4::Identity() / 4.0) == 0.0);

  const DensityMatrix up = product_state(1.0, 0.0);
  Eigen::Vector4d diag;
  diag << 0.5, 0.25, 0.25, 0.0;
  CHECK((up.matrix().diagonal().real() - diag).cwiseAbs().maxCoeff() < 1e-16);
  CHECK(wootters_concurrence(up) == 0.0);

  const DensityMatrix m = product_state(0.5, 0.3);
  diag << 1.5 / 4, 0.7 / 4, 1.3 / 4, 0.5 / 4;
  CHECK((m.matrix().diagonal().real() - diag).cwiseAbs().maxCoeff() < 1e-16);
  Mat4 off = m.matrix();
  off.diagonal().setZero();
  CHECK(pauli::max_abs(off) == 0.0);
  const Mat2 first = partial_trace_second(m.matrix());
  const Mat2 second = partial_trace_first(m.matrix());
  CHECK((first - 0.5 * (Mat2::Identity() + 0.1 * pauli::sigma(3))).cwiseAbs().maxCoeff() < 1e-16);
  CHECK((second - 0.5 * (Mat2::Identity() + 0.4 * pauli::sigma(3))).cwiseAbs().maxCoeff() < 1e-16);

  // Admissible beyond |alpha| + |beta| <= 1: the state stays diagonal with entries in [0, 1/2].
  CHECK_NOTHROW(product_state(0.8, 0.5));
  CHECK_NOTHROW(product_state(-1.0, 1.0));
  CHECK_THROWS_AS(product_state(1.1, 0.0), DomainError);
  CHECK_THROWS_AS(product_state(0.0, -1.5), DomainError);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const DensityMatrix s = product_state(u(rng), u(rng));
    REQUIRE(s.eigenvalues().minCoeff() >= 0.0);
    REQUIRE(wootters_concurrence(s) == 0.0);
  }
}

TEST_CASE("Wootters concurrence") {
  Mat4 bell = Mat4::Zero();
  bell(1, 1) = bell(2, 2) = 0.5;
  bell(1, 2) = bell(2, 1) = -0.5;
  CHECK(wootters_concurrence(DensityMatrix(bell)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(wootters_concurrence(DensityMatrix(Mat4::Identity() / 4.0)) == 0.0);

  // Pure state a|00> + b|11>: C = 2|ab|.
  const double a = std::cos(0.3), b = std::sin(0.3);
  Eigen::Vector4cd psi(a, 0, 0, Complex(0, b));
  const Mat4 pure = psi * psi.adjoint();
  CHECK(wootters_concurrence(DensityMatrix(pure)) == doctest::Approx(2 * a * b).epsilon(1e-12));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = k % 2 ? random_state(rng) : werner_state(0.4 + 0.006 * k);
    const Mat4 local = pauli::kron(random_unitary(rng), random_unitary(rng));
    const DensityMatrix rotated(Mat4(local * rho.matrix() * local.adjoint()));
    const double c = wootters_concurrence(rho);
    REQUIRE(c >= 0.0);
    REQUIRE(c <= 1.0);
    REQUIRE(std::abs(c - wootters_concurrence(rotated)) < 1e-10);
  }
}

TEST_CASE("Q factor") {
  CHECK(q_factor(0.0, 1.0, 0.1) == 0.0);
  for (double t : {0.3, 2.0, 7.7}) {
    CHECK(q_factor(t, 1.0, 0.0) == doctest::Approx(2.0 * std::pow(std::sin(t / 2), 2)).epsilon(1e-14));
    const double g = 0.1;
    const double direct = std::pow(std::sin((0.5 + 2 * g) * t), 2) / (1 + 4 * g) +
                          std::pow(std::sin((0.5 - 2 * g) * t), 2) / (1 - 4 * g);
    CHECK(q_factor(t, 1.0, g) == doctest::Approx(direct).epsilon(1e-14));
  }

  SUBCASE("resonance is a removable limit") {
    for (double t : {0.5, 3.0, 12.0}) {
      const double at = q_factor(t, 1.0, 0.25);
      CHECK(std::isfinite(at));
      CHECK(at == doctest::Approx(0.5 * std::pow(std::sin(t), 2)).epsilon(1e-12));
      const double above = q_factor(t, 1.0 + 1e-6, 0.25);
      const double below = q_factor(t, 1.0 - 1e-6, 0.25);
      const double extrapolated = 0.5 * (above + below);
      CHECK(std::abs(at - extrapolated) < 1e-9);
      CHECK(std::abs(q_factor(t, 1.0 + 5e-9, 0.25) - at) < 1e-8 * (1 + t * t));
    }
  }
}

TEST_CASE("analytic product-state concurrence") {
  CHECK(concurrence_product_analytic(0.0, 0.9, 0.2, 0.3, 0.1, 3.0, 1.0) == 0.0);
  for (double t : {1.0, 5.0, 20.0}) {
    CHECK(concurrence_product_analytic(t, 0.999, 0.0, 0.3, 0.1, 3.0, 1.0) == 0.0);
    CHECK(concurrence_product_analytic(t, 0.999, 0.5, 0.3, 0.1, 0.0, 1.0) == 0.0);
    CHECK(concurrence_product_analytic(t, 0.999, 0.5, 0.3, 0.0, 3.0, 1.0) == 0.0);
    CHECK(concurrence_product_analytic(t, 1.0, 0.0, 0.3, 0.1, 3.0, 1.0) == 0.0);
  }
  const double t = 3.0;
  const double expected = 4 * 0.3 * std::abs(0.5 * 0.1 * 3.0 * q_factor(t, 1.0, 0.1)) -
                          std::sqrt(1 - 0.999 * 0.999);
  REQUIRE(expected > 0.0);
  CHECK(concurrence_product_analytic(t, 0.999, 0.5, 0.3, 0.1, 3.0, 1.0) ==
        doctest::Approx(expected).epsilon(1e-14));
}
