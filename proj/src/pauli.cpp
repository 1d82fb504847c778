#include "laserspin/pauli.hpp"

#include <stdexcept>

namespace laserspin::pauli {

Mat2 sigma(int index) {
  const Complex i(0.0, 1.0);
  Mat2 m;
  switch (index) {
    case 0: m << 1.0, 0.0, 0.0, 1.0; break;
    case 1: m << 0.0, 1.0, 1.0, 0.0; break;
    case 2: m << 0.0, -i, i, 0.0; break;
    case 3: m << 1.0, 0.0, 0.0, -1.0; break;
    default: throw std::out_of_range("pauli index must be 0..3");
  }
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
    }
  }
  return out;
}

Mat4 product(int a, int b) { return kron(sigma(a), sigma(b)); }

Mat4 antisymmetric(int a, int b) { return product(a, b) - product(b, a); }

Mat4 dot() { return product(1, 1) + product(2, 2) + product(3, 3); }

Mat4 swap() {
  Mat4 s = Mat4::Zero();
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

Mat2 along(const Vec3& n) { return n.x() * sigma(1) + n.y() * sigma(2) + n.z() * sigma(3); }

Mat4 commutator(const Mat4& a, const Mat4& b) { return a * b - b * a; }

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace laserspin::pauli
