#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace laserspin {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

/// Parameter outside the region where the closed-form physics is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix handed in as a density matrix is not Hermitian, unit-trace and PSD.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive integration or quadrature could not reach the requested tolerance.
class IntegratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace laserspin
