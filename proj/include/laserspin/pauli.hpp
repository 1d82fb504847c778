#pragma once

// Pauli algebra on one and two spin-1/2 slots. Index 0 is the 2x2 identity,
// 1..3 are sigma_x, sigma_y, sigma_z. Two-slot basis order is
// |up up>, |up down>, |down up>, |down down>.

#include "laserspin/types.hpp"

namespace laserspin::pauli {

Mat2 sigma(int index);

/// sigma_a (x) sigma_b
Mat4 product(int a, int b);

/// sigma_[ab] = sigma_a (x) sigma_b - sigma_b (x) sigma_a
Mat4 antisymmetric(int a, int b);

/// sigma . sigma = sum_k sigma_k (x) sigma_k, spectrum {1, 1, 1, -3}.
Mat4 dot();

Mat4 swap();

Mat4 kron(const Mat2& a, const Mat2& b);

/// n . sigma for a real 3-vector.
Mat2 along(const Vec3& n);

Mat4 commutator(const Mat4& a, const Mat4& b);

double max_abs(const Mat4& m);

}  // namespace laserspin::pauli
