#include <doctest.h>

#include <cmath>

#include "laserspin/elliptic.hpp"
#include "laserspin/oracles.hpp"

using namespace laserspin;
using elliptic::Modulus;

TEST_CASE("modulus domain") {
  CHECK_NOTHROW(Modulus(0.0));
  CHECK_NOTHROW(Modulus(0.999999));
  CHECK_THROWS_AS(Modulus(1.0), DomainError);
  CHECK_THROWS_AS(Modulus(1.5), DomainError);
  CHECK_THROWS_AS(Modulus(-0.1), DomainError);
  CHECK_THROWS_AS(Modulus(std::nan("")), DomainError);
  CHECK(Modulus(0.6).complementary() == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("complete integral K") {
  CHECK(elliptic::complete_K(Modulus(0.0)) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(std::abs(elliptic::complete_K(Modulus(0.5)) - 1.6857503548125960429) < 1e-14);
  CHECK(std::abs(elliptic::complete_K(Modulus(0.7)) - 1.8456939983747235102) < 1e-14);
  CHECK(std::abs(elliptic::complete_K(Modulus(0.5)) - oracle::complete_K_quadrature(0.5)) < 1e-12);

  SUBCASE("logarithmic growth towards mu = 1") {
    double previous = 0.0;
    for (int k = 2; k <= 7; ++k) {
      const Modulus mu(std::sqrt(1.0 - std::pow(10.0, -2 * k)));
      const double kp = mu.complementary();
      const double value = elliptic::complete_K(mu);
      CHECK(std::isfinite(value));
      CHECK(value > previous);
      CHECK(value == doctest::Approx(std::log(4.0 / kp)).epsilon(1e-3));
      previous = value;
    }
  }
}

TEST_CASE("jacobi values") {
  for (double mu : {0.0, 0.3, 0.9}) {
    const auto v = elliptic::jacobi(0.0, Modulus(mu));
    CHECK(v.sn == 0.0);
    CHECK(v.cn == 1.0);
    CHECK(v.dn == 1.0);
    CHECK(elliptic::jacobi_am(0.0, Modulus(mu)) == 0.0);
  }
  const auto quarter = elliptic::jacobi(kPi / 2, Modulus(0.0));
  CHECK(quarter.sn == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(quarter.cn) < 1e-15);
  CHECK(quarter.dn == 1.0);

  const auto v = elliptic::jacobi(1.3, Modulus(0.7));
  CHECK(std::abs(v.sn - 0.921467222511419848) < 1e-14);
  CHECK(std::abs(v.cn - 0.388456120864492831) < 1e-14);
  CHECK(std::abs(v.dn - 0.764159732870146622) < 1e-14);
  const auto inv = oracle::jacobi_by_inversion(1.3, 0.7);
  CHECK(std::abs(v.sn - inv.sn) < 1e-12);
  CHECK(std::abs(v.cn - inv.cn) < 1e-12);
  CHECK(std::abs(v.dn - inv.dn) < 1e-12);

  const double k = elliptic::complete_K(Modulus(0.5));
  CHECK(std::abs(elliptic::jacobi_am(3 * k, Modulus(0.5)) - 1.5 * kPi) < 1e-12);
  CHECK(std::abs(elliptic::jacobi_am(-3 * k, Modulus(0.5)) + 1.5 * kPi) < 1e-12);
  CHECK_THROWS_AS(elliptic::jacobi(INFINITY, Modulus(0.5)), DomainError);
}

TEST_CASE("identities on a dense grid") {
  double worst_pyth = 0.0, worst_dn = 0.0, worst_bounds = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double u = -25.0 + 50.0 * i / 200.0;
    for (int j = 0; j <= 40; ++j) {
      const Modulus mu(0.99 * j / 40.0);
      const auto v = elliptic::jacobi(u, mu);
      worst_pyth = std::max(worst_pyth, std::abs(v.sn * v.sn + v.cn * v.cn - 1.0));
      worst_dn = std::max(worst_dn, std::abs(v.dn * v.dn + mu.parameter() * v.sn * v.sn - 1.0));
      worst_bounds = std::max({worst_bounds, std::abs(v.sn) - 1.0, std::abs(v.cn) - 1.0,
                               v.dn - 1.0, mu.complementary() - v.dn});
    }
  }
  CHECK(worst_pyth < 1e-12);
  CHECK(worst_dn < 1e-12);
  CHECK(worst_bounds < 1e-14);
}

TEST_CASE("degenerate limits") {
  for (double u : {-7.0, -1.0, 0.4, 2.0, 11.0}) {
    const auto circ = elliptic::jacobi_all(u, Modulus(0.0));
    CHECK(std::abs(circ.sn - std::sin(u)) < 1e-12);
    CHECK(std::abs(circ.cn - std::cos(u)) < 1e-12);
    CHECK(circ.dn == 1.0);
    CHECK(circ.am == u);
  }
  for (double u : {-2.0, -0.5, 0.3, 1.0, 3.0}) {
    const auto hyp = elliptic::jacobi(u, Modulus(1.0 - 1e-9));
    CHECK(std::abs(hyp.sn - std::tanh(u)) < 1e-4);
    CHECK(std::abs(hyp.cn - 1.0 / std::cosh(u)) < 1e-4);
    CHECK(std::abs(hyp.dn - 1.0 / std::cosh(u)) < 1e-4);
  }
}

TEST_CASE("periodicity and continuity of the amplitude") {
  for (double m : {0.1, 0.5, 0.9}) {
    const Modulus mu(m);
    const double k = elliptic::complete_K(mu);
    for (double u : {-3.0, 0.2, 1.7, 6.0}) {
      const auto a = elliptic::jacobi(u, mu);
      CHECK(std::abs(elliptic::jacobi(u + 4 * k, mu).sn - a.sn) < 1e-10);
      CHECK(std::abs(elliptic::jacobi(u + 4 * k, mu).cn - a.cn) < 1e-10);
      CHECK(std::abs(elliptic::jacobi(u + 2 * k, mu).dn - a.dn) < 1e-10);
      CHECK(std::abs(elliptic::jacobi_am(u + 2 * k, mu) - elliptic::jacobi_am(u, mu) - kPi) < 1e-10);
    }
    double previous = elliptic::jacobi_am(-20.0, mu);
    for (int i = 1; i <= 4000; ++i) {
      const double am = elliptic::jacobi_am(-20.0 + 40.0 * i / 4000.0, mu);
      REQUIRE(am > previous);
      REQUIRE(am - previous < 0.02 / mu.complementary());
      previous = am;
    }
  }
}

TEST_CASE("derivative identities") {
  const double h = 1e-5;
  for (double m : {0.0, 0.4, 0.8}) {
    const Modulus mu(m);
    for (double u : {-2.5, 0.3, 1.1, 4.0}) {
      const auto v = elliptic::jacobi(u, mu);
      const auto up = elliptic::jacobi(u + h, mu);
      const auto dw = elliptic::jacobi(u - h, mu);
      CHECK(std::abs((up.sn - dw.sn) / (2 * h) - v.cn * v.dn) < 1e-6);
      CHECK(std::abs((up.cn - dw.cn) / (2 * h) + v.sn * v.dn) < 1e-6);
      CHECK(std::abs((up.dn - dw.dn) / (2 * h) + mu.parameter() * v.sn * v.cn) < 1e-6);
    }
  }
}
