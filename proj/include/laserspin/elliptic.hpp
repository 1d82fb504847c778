#pragma once

// Jacobi elliptic functions of real argument and real modulus 0 <= mu < 1.
//
// Evaluation uses the descending Landen (arithmetic-geometric mean) scale
// after reducing the argument to [-K, K]; the number of half periods removed
// is added back to the amplitude, so am(u) is continuous and unbounded.

namespace laserspin::elliptic {

/// Jacobi modulus mu in the fundamental domain [0, 1).
class Modulus {
 public:
  explicit Modulus(double mu);

  double value() const { return mu_; }
  /// mu^2
  double parameter() const { return mu_ * mu_; }
  /// sqrt(1 - mu^2), computed without cancellation near mu = 1.
  double complementary() const { return complementary_; }

 private:
  double mu_;
  double complementary_;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// Jacobi triple together with the amplitude; one evaluation yields all four.
struct JacobiValues {
  double sn;
  double cn;
  double dn;
  double am;
};

/// Complete elliptic integral of the first kind K(mu).
double complete_K(Modulus mu);

JacobiTriple jacobi(double u, Modulus mu);

/// Amplitude am(u, mu); am(u + 2K) = am(u) + pi.
double jacobi_am(double u, Modulus mu);

JacobiValues jacobi_all(double u, Modulus mu);

}  // namespace laserspin::elliptic
