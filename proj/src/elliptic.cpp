#include "laserspin/elliptic.hpp"

#include <array>
#include <cmath>
#include <string>

#include "laserspin/types.hpp"

namespace laserspin::elliptic {
namespace {

constexpr double kAgmTolerance = 1e-14;
constexpr int kMaxAgmIterations = 32;

double agm_of_complement(const Modulus& mu) {
  double a = 1.0;
  double b = mu.complementary();
  for (int i = 0; i < kMaxAgmIterations; ++i) {
    if (std::abs(a - b) < kAgmTolerance) break;
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return 0.5 * (a + b);
}

// Landen descent for |u| <= K. Returns sn, cn, dn, am of the reduced argument.
JacobiValues landen(double u, const Modulus& mu) {
  std::array<double, kMaxAgmIterations + 1> a{};
  std::array<double, kMaxAgmIterations + 1> c{};
  a[0] = 1.0;
  double b = mu.complementary();
  c[0] = mu.value();
  int n = 0;
  while (std::abs(c[n]) >= kAgmTolerance && n < kMaxAgmIterations) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  double phi_above = phi;
  for (int k = n; k > 0; --k) {
    phi_above = phi;
    phi = 0.5 * (phi + std::asin(c[k] * std::sin(phi) / a[k]));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = (n == 0) ? 1.0 : cn / std::cos(phi_above - phi);
  return {sn, cn, dn, phi};
}

}  // namespace

Modulus::Modulus(double mu) : mu_(mu), complementary_(0.0) {
  if (!(mu >= 0.0 && mu < 1.0)) {
    throw DomainError("elliptic modulus must lie in [0, 1), got " + std::to_string(mu));
  }
  complementary_ = std::sqrt((1.0 - mu) * (1.0 + mu));
}

double complete_K(Modulus mu) {
  if (mu.value() == 0.0) return 0.5 * kPi;
  return 0.5 * kPi / agm_of_complement(mu);
}

JacobiValues jacobi_all(double u, Modulus mu) {
  if (!std::isfinite(u)) throw DomainError("jacobi: argument must be finite");
  if (mu.value() == 0.0) return {std::sin(u), std::cos(u), 1.0, u};

  const double half_period = 2.0 * complete_K(mu);
  const double turns = std::floor(u / half_period + 0.5);
  const double reduced = u - turns * half_period;
  JacobiValues v = landen(reduced, mu);
  if (std::fmod(turns, 2.0) != 0.0) {
    v.sn = -v.sn;
    v.cn = -v.cn;
  }
  v.am += turns * kPi;
  return v;
}

JacobiTriple jacobi(double u, Modulus mu) {
  const JacobiValues v = jacobi_all(u, mu);
  return {v.sn, v.cn, v.dn};
}

double jacobi_am(double u, Modulus mu) { return jacobi_all(u, mu).am; }

}  // namespace laserspin::elliptic
